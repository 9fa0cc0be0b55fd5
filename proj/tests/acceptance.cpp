// Acceptance suite: reproduces the library's contract values exactly and
// enforces the stated runtime budgets. One PASS/FAIL line per criterion;
// exit status 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdgamma/constructions.hpp"
#include "sdgamma/errors.hpp"
#include "sdgamma/io.hpp"
#include "sdgamma/transforms.hpp"

using namespace sdgamma;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_ms;  // 0 = no budget
    bool pass = true;
    double elapsed_ms = 0;
    std::vector<std::string> failures;
};

struct Runner {
    std::vector<Criterion> results;

    void run(int id, const std::string& name, double budget_ms,
             const std::function<void(Criterion&)>& body) {
        Criterion c{id, name, budget_ms};
        auto start = Clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (budget_ms > 0 && c.elapsed_ms > budget_ms) {
            c.pass = false;
            c.failures.push_back("runtime " + std::to_string(c.elapsed_ms) + " ms over budget " +
                                 std::to_string(budget_ms) + " ms");
        }
        std::printf("[%s] criterion %2d: %-34s (%.1f ms)\n", c.pass ? "PASS" : "FAIL", id,
                    name.c_str(), c.elapsed_ms);
        for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
        results.push_back(std::move(c));
    }
};

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.pass = false;
        if (c.failures.size() < 12) c.failures.push_back(what);
    }
}

SimplicialComplex polygon(int sides, Vertex first) {
    std::vector<std::vector<Vertex>> facets;
    for (int i = 0; i < sides; ++i)
        facets.push_back({first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % sides)});
    return SimplicialComplex::from_facets(facets);
}

CountVector random_ffk_vector(std::mt19937& rng, int colors) {
    if (colors == 0) return CountVector({1});
    std::vector<std::vector<Vertex>> facets;
    int facet_count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < facet_count; ++i) {
        int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(colors));
        std::vector<int> palette(static_cast<std::size_t>(colors));
        std::iota(palette.begin(), palette.end(), 1);
        std::shuffle(palette.begin(), palette.end(), rng);
        std::vector<Vertex> facet;
        for (int s = 0; s < size; ++s)
            facet.push_back(static_cast<Vertex>(palette[static_cast<std::size_t>(s)] +
                                                colors * static_cast<int>(rng() % 3)));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets).f_vector();
}

CountVector h_transform(const CountVector& gamma, int d) {
    std::vector<Int> h(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        for (std::size_t j = 0; j < gamma.size(); ++j)
            h[static_cast<std::size_t>(i)] +=
                gamma[j] * binomial(d - 2 * static_cast<int>(j), i - static_cast<int>(j));
    return CountVector(std::move(h), VectorRole::H);
}

CountVector g_transform(const CountVector& gamma, int d) {
    std::vector<Int> g(static_cast<std::size_t>(d / 2) + 1);
    for (int i = 0; i <= d / 2; ++i)
        for (std::size_t j = 0; j < gamma.size(); ++j)
            g[static_cast<std::size_t>(i)] +=
                gamma[j] * (binomial(d - 2 * static_cast<int>(j), i - static_cast<int>(j)) -
                            binomial(d - 2 * static_cast<int>(j), i - static_cast<int>(j) - 1));
    return CountVector(std::move(g), VectorRole::G);
}

ColoredComplex shifted_colored(const ColoredComplex& cc, int offset) {
    std::unordered_map<Vertex, int> coloring;
    for (const auto& [v, c] : cc.coloring()) coloring[v + static_cast<Vertex>(offset)] = c;
    return ColoredComplex(cc.complex().relabeled(offset), std::move(coloring), cc.num_colors());
}

// All symmetric h-vectors of the given length with h_0 = h_n = 1 and middle
// entries in {0..max_entry}.
std::vector<CountVector> symmetric_h_family(int n, int max_entry) {
    std::vector<CountVector> out;
    int free = n / 2;
    long combos = 1;
    for (int i = 0; i < free; ++i) combos *= max_entry + 1;
    for (long code = 0; code < combos; ++code) {
        std::vector<Int> h(static_cast<std::size_t>(n) + 1);
        h[0] = 1;
        if (n >= 1) h[static_cast<std::size_t>(n)] = 1;
        long rest = code;
        for (int i = 1; 2 * i <= n; ++i) {
            h[static_cast<std::size_t>(i)] = rest % (max_entry + 1);
            h[static_cast<std::size_t>(n - i)] = h[static_cast<std::size_t>(i)];
            rest /= max_entry + 1;
        }
        out.emplace_back(std::move(h), VectorRole::H);
    }
    return out;
}

void check_full_witness(Criterion& c, const CountVector& h) {
    SubdivisionWitness w = subdivision_gamma_witness(h);
    ColoredComplex colored = w.witness.to_colored_complex();
    expect(c, equals_padded(colored.complex().f_vector(), w.gamma),
           "witness f-vector mismatch for h = " + h.to_string());
    auto rep = verify_coloring(colored);
    expect(c, rep.proper, "witness coloring improper for h = " + h.to_string());
}

}  // namespace

int main() {
    Runner runner;

    runner.run(1, "restricted Eulerian golden values", 1.0, [](Criterion& c) {
        auto table = restricted_eulerian_table(4);
        expect(c, table->column_polynomial(1) == IntPolynomial({1, 4, 1}), "column 1");
        expect(c, table->column_polynomial(2) == IntPolynomial({0, 4, 2}), "column 2");
        expect(c, table->column_polynomial(3) == IntPolynomial({0, 2, 4}), "column 3");
        expect(c, table->column_polynomial(4) == IntPolynomial({0, 1, 4, 1}), "column 4");
        expect(c, eulerian_polynomial(4) == IntPolynomial({1, 11, 11, 1}), "A_4");
    });

    runner.run(2, "recurrence equals enumeration, n <= 9", 30'000, [](Criterion& c) {
        for (int n = 1; n <= 9; ++n)
            expect(c, *restricted_eulerian_table(n) == restricted_eulerian_table_by_enumeration(n),
                   "tables differ at n = " + std::to_string(n));
    });

    runner.run(3, "gamma family golden values", 0, [](Criterion& c) {
        auto check = [&](int n, int j, bool primed, const CountVector& want) {
            expect(c, equals_padded(gamma_family(n, j, primed).vec, want),
                   (primed ? std::string("gamma'") : std::string("gamma")) + "(" + std::to_string(n) +
                       "," + std::to_string(j) + ") != " + want.to_string());
        };
        check(6, 1, false, CountVector({1, 22, 16}));
        check(6, 2, false, CountVector({0, 18, 48}));
        check(6, 3, false, CountVector({0, 12, 72}));
        // base tables
        check(2, 1, false, CountVector({1}));
        check(2, 1, true, CountVector({0, 2}));
        check(3, 1, false, CountVector({1}));
        check(3, 1, true, CountVector({0, 2}));
        check(3, 2, false, CountVector({0, 2}));
        check(4, 1, false, CountVector({1, 2}));
        check(4, 1, true, CountVector({0, 2, 4}));
        check(4, 2, false, CountVector({0, 6}));
        check(4, 2, true, CountVector({0, 2, 4}));
        check(5, 1, false, CountVector({1, 8}));
        check(5, 1, true, CountVector({0, 2, 16}));
        check(5, 2, false, CountVector({0, 10, 8}));
        check(5, 2, true, CountVector({0, 2, 16}));
        check(5, 3, false, CountVector({0, 4, 8}));
    });

    runner.run(4, "gamma recurrences and table symmetries, n <= 12", 0, [](Criterion& c) {
        for (int n = 3; n <= 12; ++n) {
            auto report = verify_gamma_recurrences(n);
            for (const auto& chk : report.checks)
                expect(c, chk.pass,
                       chk.name + " fails at n = " + std::to_string(n) + ", j = " + std::to_string(chk.j));
        }
        for (int n = 1; n <= 12; ++n) {
            auto t = restricted_eulerian_table(n);
            for (int i = 0; i < n; ++i)
                for (int j = 1; j <= n; ++j) {
                    expect(c, t->entry(i, j) == t->entry(n - 1 - i, n + 1 - j),
                           "mirror symmetry fails at n = " + std::to_string(n));
                    if (n >= 2) {
                        Int rec = 0;
                        auto prev = restricted_eulerian_table(n - 1);
                        for (int k = 1; k <= j - 1; ++k)
                            if (i >= 1) rec += prev->entry(i - 1, k);
                        for (int k = j; k <= n - 1; ++k)
                            if (i <= n - 2) rec += prev->entry(i, k);
                        expect(c, t->entry(i, j) == rec,
                               "deletion recurrence fails at n = " + std::to_string(n));
                    }
                }
        }
    });

    runner.run(5, "embedding rank bound and rank/unrank round-trip", 10'000, [](Criterion& c) {
        for (int d = 2; d <= 6; ++d)
            for (int k = 1; k < d; ++k)
                for (std::uint64_t a = 1; a <= 50; ++a) {
                    expect(c, lifted_rank(d, k, a) <= (static_cast<std::uint64_t>(k) + 1) * a,
                           "rank bound fails at (" + std::to_string(d) + "," + std::to_string(k) + "," +
                               std::to_string(a) + ")");
                    expect(c, colored_subset_rank(colored_subset_unrank(d, k, a)) == a,
                           "round-trip fails at (" + std::to_string(d) + "," + std::to_string(k) + "," +
                               std::to_string(a) + ")");
                }
    });

    runner.run(6, "subdivision cross-check on fixture complexes", 5'000, [](Criterion& c) {
        std::vector<std::vector<Vertex>> octa;
        for (Vertex a : {1u, 4u})
            for (Vertex b : {2u, 5u})
                for (Vertex x : {3u, 6u}) octa.push_back({a, b, x});
        std::vector<SimplicialComplex> fixtures = {
            SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}),
            SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
            SimplicialComplex::from_facets(octa),
            join(polygon(4, 1), polygon(4, 100)).suspension(),
            join(polygon(5, 1), polygon(5, 100)).suspension(),
        };
        for (const auto& fixture : fixtures) {
            int d = fixture.dimension() + 1;
            CountVector h = h_from_f(fixture.f_vector(), d);
            CountVector direct = h_from_f(fixture.barycentric_subdivision().f_vector(), d);
            expect(c, direct == subdivision_h_vector(h), "transfer mismatch, h = " + h.to_string());
        }
        for (int k : {2, 3}) {
            auto sphere = join(polygon(k + 2, 1), polygon(k + 2, 100)).suspension();
            CountVector h = h_from_f(sphere.f_vector(), 5);
            Int mid = Int(k + 1) * (k + 1) + 1;
            expect(c, h == CountVector(std::vector<Int>{1, 2 * k + 1, mid, mid, 2 * k + 1, 1}),
                   "h mismatch at k = " + std::to_string(k));
            CountVector gamma = gamma_from_symmetric(h.to_polynomial(), 5);
            CountVector g = g_from_h(h);
            expect(c, gamma == CountVector(std::vector<Int>{1, 2 * (k - 2), Int(k - 2) * (k - 2)}),
                   "gamma mismatch at k = " + std::to_string(k));
            expect(c, g == CountVector(std::vector<Int>{1, 2 * k, Int(k) * k + 1}),
                   "g mismatch at k = " + std::to_string(k));
        }
    });

    runner.run(7, "block-permutation complex realizes the leading family, n <= 9", 60'000,
               [](Criterion& c) {
                   for (int n = 1; n <= 9; ++n) {
                       ColoredComplex gc = barred_permutation_complex(n);  // from_faces validates closure
                       expect(c, equals_padded(gc.complex().f_vector(), gamma_family(n + 1, 1, false).vec),
                              "f-vector mismatch at n = " + std::to_string(n));
                       expect(c, verify_coloring(gc).proper, "coloring fails at n = " + std::to_string(n));
                   }
               });

    runner.run(8, "ballot complexes, k <= 16", 0, [](Criterion& c) {
        for (int k = 0; k <= 16; ++k) {
            // independent oracle: filter all words over {N, E}
            std::set<std::vector<Vertex>> sets;
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                int balance = 0;
                bool ok = true;
                std::vector<Vertex> north;
                for (int i = 0; i < k && ok; ++i) {
                    bool is_north = mask & (1u << i);
                    balance += is_north ? -1 : 1;
                    if (balance < 0) ok = false;
                    if (is_north) north.push_back(static_cast<Vertex>(k - i));
                }
                if (!ok) continue;
                std::sort(north.begin(), north.end());
                sets.insert(std::move(north));
            }
            SimplicialComplex b = ballot_complex(k);
            CountVector f = b.f_vector();
            std::vector<Int> by_size(static_cast<std::size_t>(k / 2) + 1);
            for (const auto& s : sets) by_size[s.size()] += 1;
            for (int i = 0; i <= k / 2; ++i) {
                expect(c, f.at_or_zero(static_cast<std::size_t>(i)) == by_size[static_cast<std::size_t>(i)],
                       "enumeration mismatch at k = " + std::to_string(k));
                expect(c,
                       f.at_or_zero(static_cast<std::size_t>(i)) == binomial(k, i) - binomial(k, i - 1),
                       "binomial difference mismatch at k = " + std::to_string(k));
            }
            Int cat = binomial(2 * ((k + 1) / 2), (k + 1) / 2) / ((k + 1) / 2 + 1);
            expect(c, Int(static_cast<std::uint64_t>(b.facets().size())) == cat,
                   "facet count is not Catalan at k = " + std::to_string(k));
        }
    });

    runner.run(9, "witness constructions on random FFK vectors", 0, [](Criterion& c) {
        std::mt19937 rng(271828);
        for (int trial = 0; trial < 100; ++trial) {
            int d = 2 + static_cast<int>(rng() % 9);  // 2..10
            CountVector gamma = random_ffk_vector(rng, d / 2);
            expect(c, h_vector_witness(gamma, d).f_vector() == h_transform(gamma, d),
                   "h witness mismatch for gamma = " + gamma.to_string());
            expect(c, g_vector_witness(gamma, d).f_vector() == g_transform(gamma, d),
                   "g witness mismatch for gamma = " + gamma.to_string());
            auto res = is_ffk(gamma, d / 2);
            expect(c, res.ok, "generator produced a non-FFK vector");
            if (!res.ok) continue;
            ColoredComplex realization = shifted_colored(res.witness->to_colored_complex(), d);
            ColoredComplex balanced = balanced_h_vector_witness(realization, d);
            expect(c, balanced.complex().f_vector() == h_transform(gamma, d),
                   "balanced witness mismatch for gamma = " + gamma.to_string());
            expect(c, verify_coloring(balanced).proper,
                   "balanced witness coloring fails for gamma = " + gamma.to_string());
        }
    });

    runner.run(10, "balanced realization of the subdivision gamma vector", 300'000, [](Criterion& c) {
        // exhaustive family: every symmetric nonnegative h with h_0 = 1,
        // length <= 9, entries <= 3
        for (int n = 0; n <= 8; ++n) {
            for (const CountVector& h : symmetric_h_family(n, 3)) {
                SubdivisionWitness w = subdivision_gamma_witness(h);  // throws on closure failure
                expect(c, w.witness.residues_properly_colored(),
                       "residue coloring fails for h = " + h.to_string());
                for (std::size_t k = 0; k < w.gamma.size(); ++k)
                    expect(c, Int(w.witness.count(k)) == w.gamma[k],
                           "member counts differ from gamma for h = " + h.to_string());
                // full conversion for the small instances
                if (n <= 6) check_full_witness(c, h);
            }
        }
        // fixture spheres take the full path
        for (const char* h : {"1,1,1", "1,1,1,1", "1,3,3,1", "1,5,10,10,5,1", "1,7,17,17,7,1"})
            check_full_witness(c, parse_count_list(h, VectorRole::H));
        // sampled closure probes beyond the exhaustive range (lengths 10, 11)
        for (const char* h : {"1,1,1,1,1,1,1,1,1,1", "1,2,2,2,2,2,2,2,2,1", "1,1,1,1,1,1,1,1,1,1,1"}) {
            CountVector hv = parse_count_list(h, VectorRole::H);
            CountVector gamma = subdivision_gamma_vector(hv);
            auto res = is_ffk(gamma, static_cast<int>(gamma.size()) - 1, /*want_witness=*/false);
            expect(c, res.ok, "closure probe fails for h = " + hv.to_string());
        }
        // goodness certificates for everything the induction covers, n <= 10
        for (int n = 2; n <= 10; ++n) {
            const bool even = n % 2 == 0;
            const int half = even ? n / 2 : (n + 1) / 2;
            for (int j = 2; j <= half; ++j) {
                auto rep = verify_certificate(*goodness_certificate(n, j, false));
                for (const auto& v : rep.violations) expect(c, false, v);
            }
            for (int j = 1; j <= (even ? half : half - 1); ++j) {
                auto rep = verify_certificate(*goodness_certificate(n, j, true));
                for (const auto& v : rep.violations) expect(c, false, v);
            }
        }
    });

    runner.run(11, "negative controls", 0, [](Criterion& c) {
        auto res = is_ffk(CountVector({1, 3, 3}), 2);
        expect(c, !res.ok, "(1,3,3) must not be 2-FFK");
        expect(c, res.violation && res.violation->member == std::vector<std::uint32_t>{1, 4},
               "unexpected violation witness");
        GoodnessCertificate tampered = *goodness_certificate(6, 1, true);
        tampered.leaves.at(0).vec[1] += 1;
        expect(c, !verify_certificate(tampered).ok, "tampered certificate must fail");
        bool threw = false;
        try {
            subdivision_gamma_vector(CountVector({1, 2, 3}));
        } catch (const hypothesis_error&) {
            threw = true;
        }
        expect(c, threw, "asymmetric h must be rejected");
    });

    bool all = true;
    for (const auto& c : runner.results) all = all && c.pass;
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT");
    return all ? 0 : 1;
}
