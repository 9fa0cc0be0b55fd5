#include "sdgamma/ffk.hpp"

#include <algorithm>
#include <string>

#include "sdgamma/errors.hpp"

namespace sdgamma {

namespace {

constexpr int kMaxModulus = 62;  // residue sets live in a 64-bit mask

// Counting saturates far above any materializable member count, so every
// comparison against a real f-entry stays exact.
struct SatCount {
    unsigned __int128 v = 0;
    bool sat = false;

    static constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 100;

    void clamp() {
        if (v >= kLimit) {
            v = kLimit;
            sat = true;
        }
    }
    SatCount& operator+=(const SatCount& o) {
        v += o.v;
        sat = sat || o.sat;
        clamp();
        return *this;
    }
    void add_product(const SatCount& a, std::uint64_t c) {
        if (a.sat || (c != 0 && a.v > kLimit / c)) {
            v = kLimit;
            sat = true;
            return;
        }
        v += a.v * c;
        sat = sat || a.sat;
        clamp();
    }
    bool leq(std::uint64_t x) const { return !sat && v <= x; }
    std::uint64_t as_u64(const char* what) const {
        if (sat || v > std::numeric_limits<std::uint64_t>::max())
            throw capacity_error(std::string(what) + ": count exceeds 64 bits");
        return static_cast<std::uint64_t>(v);
    }
};

SatCount count_uncolored(int i, std::uint64_t m);

// Number of d-colored i-subsets of [1..m] whose colors avoid `forbidden`;
// d = 0 counts plain i-subsets.
SatCount count_colored(int d, int i, std::uint64_t m, std::uint64_t forbidden) {
    SatCount zero;
    if (i == 0) {
        SatCount one;
        one.v = 1;
        return one;
    }
    if (m == 0) return zero;
    if (d == 0) return count_uncolored(i, m);
    // Elementary symmetric polynomial in the residue-class sizes.
    std::vector<SatCount> e(static_cast<std::size_t>(i) + 1);
    e[0].v = 1;
    for (int r = 1; r <= d; ++r) {
        if (forbidden >> r & 1) continue;
        if (static_cast<std::uint64_t>(r) > m) continue;
        std::uint64_t size = (m - static_cast<std::uint64_t>(r)) / static_cast<std::uint64_t>(d) + 1;
        for (int t = i; t >= 1; --t)
            e[static_cast<std::size_t>(t)].add_product(e[static_cast<std::size_t>(t - 1)], size);
    }
    return e[static_cast<std::size_t>(i)];
}

// Plain C(m, i), saturating.
SatCount count_uncolored(int i, std::uint64_t m) {
    SatCount r;
    r.v = 1;
    if (i == 0) return r;
    if (m < static_cast<std::uint64_t>(i)) return SatCount{};
    for (int t = 1; t <= i; ++t) {
        // C(m-i+t, t) = C(m-i+t-1, t-1) * (m-i+t) / t, exact at each step.
        std::uint64_t factor = m - static_cast<std::uint64_t>(i) + static_cast<std::uint64_t>(t);
        if (r.sat || r.v > SatCount::kLimit / factor) {
            r.v = SatCount::kLimit;
            r.sat = true;
            continue;
        }
        r.v = r.v * factor / static_cast<unsigned __int128>(t);
    }
    r.clamp();
    return r;
}

// rank - 1 of the sorted element list among d-colored subsets of its size.
SatCount rank_below(const std::vector<std::uint32_t>& elems, int d) {
    SatCount below;
    std::uint64_t suffix_mask = 0;
    for (std::size_t i = elems.size(); i > 0; --i) {
        below += count_colored(d, static_cast<int>(i), elems[i - 1] - 1, suffix_mask);
        suffix_mask |= 1ull << residue_color(elems[i - 1], d);
    }
    return below;
}

void validate_modulus(int d) {
    if (d < 1) throw range_error("modulus must be positive");
    if (d > kMaxModulus) throw range_error("modulus above " + std::to_string(kMaxModulus) + " unsupported");
}

// Recursive revlex generator: fills buf[pos] with the largest element of the
// prefix buf[0..pos], smaller positions first. Returns false when the
// visitor aborts. modulus 0 disables the congruence constraint.
bool generate(int d, std::vector<std::uint32_t>& buf, int pos, std::uint64_t limit, std::uint64_t used,
              const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    for (std::uint64_t m = static_cast<std::uint64_t>(pos) + 1; m <= limit; ++m) {
        std::uint64_t next_used = used;
        if (d >= 1) {
            int color = residue_color(m, d);
            if (used >> color & 1) continue;
            next_used |= 1ull << color;
        }
        if (m > std::numeric_limits<std::uint32_t>::max())
            throw capacity_error("subset elements exceed 32-bit range");
        buf[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(m);
        if (pos == 0) {
            if (!visit(buf)) return false;
        } else if (!generate(d, buf, pos - 1, m - 1, next_used, visit)) {
            return false;
        }
    }
    return true;
}

void run_generator(int d, int k, const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    if (k == 0) {
        std::vector<std::uint32_t> empty;
        visit(empty);
        return;
    }
    std::vector<std::uint32_t> buf(static_cast<std::size_t>(k));
    generate(d, buf, k - 1, std::numeric_limits<std::uint64_t>::max(), 0, visit);
}

}  // namespace

int residue_color(std::uint64_t element, int d) {
    int r = static_cast<int>(element % static_cast<std::uint64_t>(d));
    return r == 0 ? d : r;
}

ColoredSubset::ColoredSubset(std::vector<std::uint32_t> elements, int modulus)
    : elems_(std::move(elements)), d_(modulus) {
    validate_modulus(d_);
    std::sort(elems_.begin(), elems_.end());
    std::uint64_t used = 0;
    for (std::uint32_t e : elems_) {
        if (e == 0) throw validation_error("colored subsets contain positive integers only");
        int c = residue_color(e, d_);
        if (used >> c & 1)
            throw validation_error("elements congruent mod " + std::to_string(d_) +
                                   " in colored subset: residue class " + std::to_string(c));
        used |= 1ull << c;
    }
}

std::vector<int> ColoredSubset::colors() const {
    std::vector<int> cs;
    cs.reserve(elems_.size());
    for (std::uint32_t e : elems_) cs.push_back(residue_color(e, d_));
    std::sort(cs.begin(), cs.end());
    return cs;
}

std::strong_ordering revlex_compare(const ColoredSubset& a, const ColoredSubset& b) {
    if (a.modulus() != b.modulus()) throw validation_error("revlex_compare: modulus mismatch");
    if (a.size() != b.size()) throw validation_error("revlex_compare: cardinality mismatch");
    const auto& x = a.elements();
    const auto& y = b.elements();
    for (std::size_t i = x.size(); i > 0; --i) {
        if (x[i - 1] != y[i - 1]) return x[i - 1] <=> y[i - 1];
    }
    return std::strong_ordering::equal;
}

void for_each_colored_subset(int d, int k,
                             const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    validate_modulus(d);
    if (k < 0) throw range_error("negative cardinality");
    if (k > d) throw range_error("no " + std::to_string(d) + "-colored " + std::to_string(k) + "-subsets exist");
    run_generator(d, k, visit);
}

ColoredSubset colored_subset_unrank(int d, int k, std::uint64_t j) {
    validate_modulus(d);
    if (k < 0 || k > d) throw range_error("no " + std::to_string(d) + "-colored " + std::to_string(k) + "-subsets exist");
    if (j < 1) throw range_error("rank is 1-based");
    std::vector<std::uint32_t> found;
    std::uint64_t remaining = j;
    run_generator(d, k, [&](const std::vector<std::uint32_t>& member) {
        if (--remaining == 0) {
            found = member;
            return false;
        }
        return true;
    });
    if (remaining != 0)  // only k = 0 can exhaust: the empty subset is unique
        throw range_error("rank " + std::to_string(j) + " exceeds the family size");
    return ColoredSubset(std::move(found), d);
}

std::uint64_t colored_subset_rank(const ColoredSubset& s) {
    SatCount below = rank_below(s.elements(), s.modulus());
    return below.as_u64("colored_subset_rank") + 1;
}

std::uint32_t lift_element(std::uint32_t s, int d) {
    if (d < 2) throw range_error("lift_element needs d >= 2");
    if (s == 0) throw validation_error("elements are positive");
    std::uint32_t i = (s - 1) / static_cast<std::uint32_t>(d - 1);
    return s + i;
}

ColoredSubset lift_to_modulus(const ColoredSubset& s, int d) {
    if (d < 2) throw range_error("lift_to_modulus needs d >= 2");
    if (s.modulus() != d - 1)
        throw validation_error("lift_to_modulus: subset has modulus " + std::to_string(s.modulus()) +
                               ", expected " + std::to_string(d - 1));
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (std::uint32_t e : s.elements()) out.push_back(lift_element(e, d));
    return ColoredSubset(std::move(out), d);
}

std::uint64_t lifted_rank(int d, int k, std::uint64_t a) {
    if (k >= d) throw range_error("lifted_rank requires k < d");
    return colored_subset_rank(lift_to_modulus(colored_subset_unrank(d - 1, k, a), d));
}

bool dominates(const CountVector& f, const CountVector& fprime) {
    if (f.empty() || fprime.empty() || f[0] != 1 || fprime[0] != 1) return false;
    std::size_t n = std::max(f.size(), fprime.size());
    for (std::size_t i = 0; i < n; ++i)
        if (f.at_or_zero(i) < fprime.at_or_zero(i)) return false;
    return true;
}

std::uint64_t CompressedComplex::count(std::size_t k) const {
    if (k >= members_.size()) return 0;
    return k == 0 ? 1 : members_[k].size() / k;
}

const std::vector<std::uint32_t>& CompressedComplex::members(std::size_t k) const {
    static const std::vector<std::uint32_t> empty;
    return k < members_.size() ? members_[k] : empty;
}

bool CompressedComplex::residues_properly_colored() const {
    for (std::size_t k = 1; k < members_.size(); ++k) {
        const auto& flat = members_[k];
        for (std::size_t off = 0; off < flat.size(); off += k) {
            std::uint64_t used = 0;
            for (std::size_t i = 0; i < k; ++i) {
                int c = residue_color(flat[off + i], d_);
                if (used >> c & 1) return false;
                used |= 1ull << c;
            }
        }
    }
    return true;
}

namespace {

struct ValidatedCounts {
    std::vector<std::uint64_t> counts;  // counts[k] = f_k
};

ValidatedCounts validate_f(const CountVector& f, int d, std::uint64_t element_cap) {
    if (d < 0) throw range_error("negative modulus");
    if (d > kMaxModulus) throw range_error("modulus above " + std::to_string(kMaxModulus) + " unsupported");
    if (f.empty() || f[0] != 1) throw validation_error("f-vector must start with f_0 = 1");
    if (!f.is_nonnegative()) throw validation_error("f-vector has a negative entry");
    ValidatedCounts out;
    Int elements = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (static_cast<int>(k) > d && f[k] != 0)
            throw range_error("no " + std::to_string(d) + "-colored " + std::to_string(k) +
                              "-subsets exist, but f_" + std::to_string(k) + " = " + f[k].str());
        out.counts.push_back(to_uint64_checked(f[k], "compressed family size"));
        elements += f[k] * static_cast<unsigned>(k);
    }
    if (elements > element_cap)
        throw capacity_error("compressed family needs " + elements.str() +
                             " stored elements, cap is " + std::to_string(element_cap));
    return out;
}

}  // namespace

CompressedComplex compressed_complex(const CountVector& f, int d, std::uint64_t element_cap) {
    auto v = validate_f(f, d, element_cap);
    CompressedComplex cc;
    cc.d_ = d;
    cc.f_ = f;
    cc.members_.resize(v.counts.size());
    for (std::size_t k = 1; k < v.counts.size(); ++k) {
        std::uint64_t want = v.counts[k];
        if (want == 0) continue;
        auto& flat = cc.members_[k];
        flat.reserve(want * k);
        std::uint64_t emitted = 0;
        run_generator(d, static_cast<int>(k), [&](const std::vector<std::uint32_t>& member) {
            flat.insert(flat.end(), member.begin(), member.end());
            return ++emitted < want;
        });
    }
    return cc;
}

FfkResult is_ffk(const CountVector& f, int d, bool want_witness, std::uint64_t element_cap) {
    auto v = validate_f(f, d, element_cap);
    FfkResult result;
    CompressedComplex witness;
    witness.d_ = d;
    witness.f_ = f;
    witness.members_.resize(v.counts.size());

    std::vector<std::uint32_t> subset;
    for (std::size_t k = 1; k < v.counts.size(); ++k) {
        std::uint64_t want = v.counts[k];
        if (want == 0) continue;
        std::uint64_t prev = v.counts[k - 1];
        // Everything inside [1..closed_prefix] is present below, so only
        // subsets reaching past it need an explicit rank. (k = 1 subsets are
        // empty and always present since f_0 = 1.)
        std::uint64_t closed_prefix = 0;
        if (k >= 2)
            while (count_colored(d, static_cast<int>(k) - 1, closed_prefix + 1, 0).leq(prev)) ++closed_prefix;

        std::uint64_t emitted = 0;
        run_generator(d, static_cast<int>(k), [&](const std::vector<std::uint32_t>& member) {
            for (std::size_t p = 0; p < member.size() && !result.violation; ++p) {
                subset.clear();
                for (std::size_t i = 0; i < member.size(); ++i)
                    if (i != p) subset.push_back(member[i]);
                if (!subset.empty() && subset.back() <= closed_prefix) continue;
                SatCount below = rank_below(subset, d);
                bool present = !below.sat && below.v < prev;  // rank = below + 1 <= prev
                if (!present) {
                    FfkViolation violation;
                    violation.member = member;
                    violation.missing_subset = subset;
                    result.violation = std::move(violation);
                }
            }
            if (result.violation) return false;
            if (want_witness) {
                auto& flat = witness.members_[k];
                flat.insert(flat.end(), member.begin(), member.end());
            }
            return ++emitted < want;
        });
        if (result.violation) break;
    }
    result.ok = !result.violation;
    if (result.ok && want_witness) result.witness = std::move(witness);
    return result;
}

ColoredComplex CompressedComplex::to_colored_complex() const {
    // Mark corank-1 subsets as covered; uncovered members are the facets.
    std::vector<std::vector<bool>> covered(members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k) covered[k].assign(count(k), false);
    std::vector<std::uint32_t> subset;
    for (std::size_t k = 1; k < members_.size(); ++k) {
        const auto& flat = members_[k];
        for (std::size_t off = 0; off < flat.size(); off += k) {
            for (std::size_t p = 0; p < k; ++p) {
                subset.clear();
                for (std::size_t i = 0; i < k; ++i)
                    if (i != p) subset.push_back(flat[off + i]);
                if (k == 1) {
                    covered[0][0] = true;
                    continue;
                }
                SatCount below = rank_below(subset, d_);
                if (below.sat || below.v >= count(k - 1))
                    throw validation_error("compressed family is not downward closed");
                covered[k - 1][static_cast<std::size_t>(below.v)] = true;
            }
        }
    }
    std::vector<Face> facets;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        for (std::uint64_t idx = 0; idx < count(k); ++idx) {
            if (covered[k][idx]) continue;
            const auto& flat = members_[k];
            std::vector<Vertex> vs(flat.begin() + static_cast<std::ptrdiff_t>(idx * k),
                                   flat.begin() + static_cast<std::ptrdiff_t>((idx + 1) * k));
            facets.push_back(Face::from_sorted_unchecked(std::move(vs)));
        }
    }
    std::unordered_map<Vertex, int> coloring;
    for (std::uint64_t j = 0; j < count(1); ++j) {
        Vertex v = members_[1][j];
        coloring[v] = residue_color(v, d_);
    }
    return ColoredComplex(SimplicialComplex::from_facets_unchecked(std::move(facets)),
                          std::move(coloring), d_);
}

std::vector<std::vector<std::uint32_t>> standard_compressed_members(const CountVector& f,
                                                                    std::uint64_t element_cap) {
    if (f.empty() || f[0] != 1) throw validation_error("f-vector must start with f_0 = 1");
    if (!f.is_nonnegative()) throw validation_error("f-vector has a negative entry");
    Int elements = 0;
    for (std::size_t k = 1; k < f.size(); ++k) elements += f[k] * static_cast<unsigned>(k);
    if (elements > element_cap) throw capacity_error("standard compression exceeds element cap");
    std::vector<std::vector<std::uint32_t>> out(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) {
        std::uint64_t want = to_uint64_checked(f[k], "standard compression size");
        if (want == 0) continue;
        out[k].reserve(want * k);
        std::uint64_t emitted = 0;
        run_generator(0, static_cast<int>(k), [&](const std::vector<std::uint32_t>& member) {
            out[k].insert(out[k].end(), member.begin(), member.end());
            return ++emitted < want;
        });
    }
    return out;
}

}  // namespace sdgamma
