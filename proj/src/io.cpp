#include "sdgamma/io.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <json.hpp>

#include "sdgamma/errors.hpp"
#include "sdgamma/transforms.hpp"

namespace sdgamma {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

Int int_from_json(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    throw validation_error("expected an integer or a decimal string, got " + v.dump());
}

CountVector count_vector_from_json(const json& arr, VectorRole role) {
    if (!arr.is_array()) throw validation_error("expected an array of integers, got " + arr.dump());
    std::vector<Int> entries;
    entries.reserve(arr.size());
    for (const auto& v : arr) entries.push_back(int_from_json(v));
    return CountVector(std::move(entries), role);
}

json count_vector_to_json(const CountVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(v[i].str());
    return arr;
}

json poly_to_json(const IntPolynomial& p) {
    json arr = json::array();
    int d = std::max(p.degree(), 0);
    for (int i = 0; i <= d; ++i) arr.push_back(p.coeff(static_cast<std::size_t>(i)).str());
    return arr;
}

std::vector<std::vector<Vertex>> facets_from_json(const json& arr) {
    if (!arr.is_array()) throw validation_error("\"facets\" must be an array of arrays");
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : arr) {
        if (!f.is_array()) throw validation_error("each facet must be an array of vertex ids");
        std::vector<Vertex> verts;
        for (const auto& v : f) {
            if (!v.is_number_unsigned() && !v.is_number_integer())
                throw validation_error("vertex ids must be nonnegative integers");
            long long x = v.get<long long>();
            if (x < 0 || x > std::numeric_limits<Vertex>::max())
                throw validation_error("vertex id " + std::to_string(x) + " out of range");
            verts.push_back(static_cast<Vertex>(x));
        }
        out.push_back(std::move(verts));
    }
    return out;
}

json facets_to_json(const std::vector<Face>& facets) {
    json arr = json::array();
    for (const Face& f : facets) {
        json face = json::array();
        for (Vertex v : f.vertices()) face.push_back(v);
        arr.push_back(std::move(face));
    }
    return arr;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("input is not valid JSON: ") + e.what());
    }
}

std::string vector_or_note(const std::optional<CountVector>& v, const std::string& note) {
    return v ? v->to_string() : "(" + note + ")";
}

}  // namespace

InputDocument parse_input_document(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw validation_error("input document must be a JSON object");
    InputDocument out;
    int sources = 0;
    if (doc.contains("facets")) {
        out.facets = facets_from_json(doc["facets"]);
        ++sources;
    }
    if (doc.contains("h")) {
        out.h = count_vector_from_json(doc["h"], VectorRole::H);
        ++sources;
    }
    if (doc.contains("f")) {
        out.f = count_vector_from_json(doc["f"], VectorRole::F);
        ++sources;
    }
    if (sources != 1)
        throw validation_error("input document must contain exactly one of \"facets\", \"h\", \"f\"");
    return out;
}

CountVector parse_count_list(const std::string& csv, VectorRole role) {
    std::vector<Int> entries;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty()) throw validation_error("empty entry in integer list: \"" + csv + "\"");
        try {
            entries.emplace_back(token);
        } catch (const std::exception&) {
            throw validation_error("bad integer \"" + token + "\" in list");
        }
    }
    if (entries.empty()) throw validation_error("empty integer list");
    return CountVector(std::move(entries), role);
}

std::vector<std::vector<Vertex>> parse_facet_list(const std::string& text) {
    return facets_from_json(parse_json(text));
}

namespace {

VectorsReport vectors_report_core(CountVector f, CountVector h) {
    VectorsReport rep;
    rep.d = static_cast<int>(h.size()) - 1;
    rep.f = std::move(f);
    rep.h = std::move(h);
    rep.g = g_from_h(rep.h);
    bool symmetric = true;
    for (int i = 0; 2 * i <= rep.d; ++i)
        if (rep.h[static_cast<std::size_t>(i)] != rep.h[static_cast<std::size_t>(rep.d - i)]) symmetric = false;
    if (symmetric) {
        rep.gamma = gamma_from_symmetric(rep.h.to_polynomial(), rep.d);
    } else {
        rep.gamma_note = "h-vector is not symmetric";
    }
    rep.h_sd = subdivision_h_vector(rep.h);
    if (symmetric && rep.h.is_nonnegative()) {
        rep.gamma_sd = subdivision_gamma_vector(rep.h);
    } else {
        rep.gamma_sd_note = symmetric ? "h-vector has negative entries" : "h-vector is not symmetric";
    }
    return rep;
}

}  // namespace

VectorsReport vectors_report_from_facets(const std::vector<std::vector<Vertex>>& facets) {
    SimplicialComplex c = SimplicialComplex::from_facets(facets);
    CountVector f = c.f_vector();
    int d = static_cast<int>(f.size()) - 1;
    return vectors_report_core(f, h_from_f(f, d));
}

VectorsReport vectors_report_from_h(const CountVector& h) {
    int d = static_cast<int>(h.size()) - 1;
    return vectors_report_core(f_from_h(h, d), h);
}

std::string render_text(const VectorsReport& rep) {
    std::ostringstream os;
    os << "d          = " << rep.d << "\n";
    os << "f          = " << rep.f.to_string() << "\n";
    os << "h          = " << rep.h.to_string() << "\n";
    os << "g          = " << rep.g.to_string() << "\n";
    os << "gamma      = " << vector_or_note(rep.gamma, rep.gamma_note) << "\n";
    os << "h(sd)      = " << rep.h_sd.to_string() << "\n";
    os << "gamma(sd)  = " << vector_or_note(rep.gamma_sd, rep.gamma_sd_note) << "\n";
    return os.str();
}

std::string render_json(const VectorsReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "vectors";
    doc["d"] = rep.d;
    doc["f"] = count_vector_to_json(rep.f);
    doc["h"] = count_vector_to_json(rep.h);
    doc["g"] = count_vector_to_json(rep.g);
    doc["gamma"] = rep.gamma ? count_vector_to_json(*rep.gamma) : json(nullptr);
    if (!rep.gamma_note.empty()) doc["gamma_note"] = rep.gamma_note;
    doc["h_sd"] = count_vector_to_json(rep.h_sd);
    doc["gamma_sd"] = rep.gamma_sd ? count_vector_to_json(*rep.gamma_sd) : json(nullptr);
    if (!rep.gamma_sd_note.empty()) doc["gamma_sd_note"] = rep.gamma_sd_note;
    return doc.dump(2) + "\n";
}

SubdivideReport subdivide_report(const std::vector<std::vector<Vertex>>& facets) {
    SimplicialComplex c = SimplicialComplex::from_facets(facets);
    SubdivideReport rep;
    rep.sd = c.barycentric_subdivision(&rep.vertex_faces);
    rep.f = rep.sd.f_vector();
    rep.h = h_from_f(rep.f, static_cast<int>(rep.f.size()) - 1);
    return rep;
}

std::string render_text(const SubdivideReport& rep) {
    std::ostringstream os;
    os << "vertices (id = parent face):\n";
    for (std::size_t i = 0; i < rep.vertex_faces.size(); ++i)
        os << "  " << (i + 1) << " = " << rep.vertex_faces[i].to_string() << "\n";
    os << "facets:\n";
    for (const Face& f : rep.sd.facets()) os << "  " << f.to_string() << "\n";
    os << "f = " << rep.f.to_string() << "\n";
    os << "h = " << rep.h.to_string() << "\n";
    return os.str();
}

std::string render_json(const SubdivideReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "subdivide";
    json verts = json::array();
    for (std::size_t i = 0; i < rep.vertex_faces.size(); ++i) {
        json v;
        v["id"] = i + 1;
        json parent = json::array();
        for (Vertex p : rep.vertex_faces[i].vertices()) parent.push_back(p);
        v["parent_face"] = std::move(parent);
        verts.push_back(std::move(v));
    }
    doc["vertices"] = std::move(verts);
    doc["facets"] = facets_to_json(rep.sd.facets());
    doc["f"] = count_vector_to_json(rep.f);
    doc["h"] = count_vector_to_json(rep.h);
    return doc.dump(2) + "\n";
}

EulerianReport eulerian_report(int n) {
    EulerianReport rep;
    rep.n = n;
    auto table = restricted_eulerian_table(n);
    rep.table.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rep.table[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            rep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = table->entry(i, j);
    }
    rep.eulerian = eulerian_polynomial(n);
    for (int j = 1; 2 * j <= n + 1; ++j) rep.families.push_back(gamma_family(n, j, false));
    if (n >= 2) {
        for (int j = 1; 2 * j < n + 1; ++j) rep.families.push_back(gamma_family(n, j, true));
    } else {
        rep.primed_note = "no primed families at n = 1 (empty index range)";
    }
    return rep;
}

std::string render_text(const EulerianReport& rep) {
    std::ostringstream os;
    os << "restricted Eulerian table, n = " << rep.n << " (rows: descents, columns: first letter)\n";
    std::size_t width = 1;
    for (const auto& row : rep.table)
        for (const Int& v : row) width = std::max(width, v.str().size());
    for (const auto& row : rep.table) {
        os << " ";
        for (const Int& v : row) {
            std::string s = v.str();
            os << " " << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
    }
    os << "A_" << rep.n << "(t) = " << rep.eulerian.to_string() << "\n";
    for (const auto& fam : rep.families)
        os << "gamma" << (fam.primed ? "'" : " ") << "(" << fam.n << "," << fam.j
           << ") = " << fam.vec.to_string() << "\n";
    if (!rep.primed_note.empty()) os << rep.primed_note << "\n";
    return os.str();
}

std::string render_json(const EulerianReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "eulerian";
    doc["n"] = rep.n;
    json table = json::array();
    for (const auto& row : rep.table) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.str());
        table.push_back(std::move(r));
    }
    doc["table"] = std::move(table);
    doc["eulerian_polynomial"] = poly_to_json(rep.eulerian);
    json fams = json::array();
    for (const auto& fam : rep.families) {
        json f;
        f["j"] = fam.j;
        f["primed"] = fam.primed;
        f["values"] = count_vector_to_json(fam.vec);
        fams.push_back(std::move(f));
    }
    doc["gamma_families"] = std::move(fams);
    if (!rep.primed_note.empty()) doc["primed_note"] = rep.primed_note;
    return doc.dump(2) + "\n";
}

FfkCheckReport ffk_check_report(const CountVector& f, int d) {
    FfkCheckReport rep;
    rep.f = f;
    rep.d = d;
    FfkResult res = is_ffk(f, d, /*want_witness=*/false);
    rep.ok = res.ok;
    rep.violation = std::move(res.violation);
    return rep;
}

std::string render_text(const FfkCheckReport& rep) {
    std::ostringstream os;
    os << "f = " << rep.f.to_string() << ", modulus d = " << rep.d << "\n";
    if (rep.ok) {
        os << "FFK: yes (compressed family is downward closed)\n";
    } else {
        os << "FFK: no\n";
        os << "first violating member: " << Face::from_sorted_unchecked(rep.violation->member).to_string()
           << " misses subset " << Face::from_sorted_unchecked(rep.violation->missing_subset).to_string()
           << "\n";
    }
    return os.str();
}

std::string render_json(const FfkCheckReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "ffk-check";
    doc["f"] = count_vector_to_json(rep.f);
    doc["d"] = rep.d;
    doc["is_ffk"] = rep.ok;
    if (rep.violation) {
        json v;
        v["member"] = json(rep.violation->member);
        v["missing_subset"] = json(rep.violation->missing_subset);
        doc["violation"] = std::move(v);
    } else {
        doc["violation"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

WitnessReport witness_report(const CountVector& h) {
    SubdivisionWitness w = subdivision_gamma_witness(h);
    ColoredComplex cc = w.witness.to_colored_complex();
    ColoringReport coloring = verify_coloring(cc);
    WitnessReport rep{h, w.gamma, w.witness.modulus(), std::move(cc), coloring.proper, coloring.balanced};
    return rep;
}

std::string render_text(const WitnessReport& rep) {
    std::ostringstream os;
    os << "h          = " << rep.h.to_string() << "\n";
    os << "gamma(sd)  = " << rep.gamma.to_string() << "\n";
    os << "modulus    = " << rep.modulus << "\n";
    os << "closure    = passed\n";
    os << "coloring   = " << (rep.coloring_ok ? "proper" : "IMPROPER") << (rep.balanced ? ", balanced" : "")
       << "\n";
    os << "vertex colors:\n";
    for (Vertex v : rep.witness.complex().vertices())
        os << "  " << v << " -> " << rep.witness.color_of(v) << "\n";
    os << "facets:\n";
    for (const Face& f : rep.witness.complex().facets()) os << "  " << f.to_string() << "\n";
    return os.str();
}

std::string render_json(const WitnessReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "witness";
    doc["h"] = count_vector_to_json(rep.h);
    doc["gamma_sd"] = count_vector_to_json(rep.gamma);
    doc["modulus"] = rep.modulus;
    doc["closure"] = true;
    doc["coloring_proper"] = rep.coloring_ok;
    doc["balanced"] = rep.balanced;
    json colors = json::array();
    for (Vertex v : rep.witness.complex().vertices()) {
        json entry = json::array();
        entry.push_back(v);
        entry.push_back(rep.witness.color_of(v));
        colors.push_back(std::move(entry));
    }
    doc["vertex_colors"] = std::move(colors);
    doc["facets"] = facets_to_json(rep.witness.complex().facets());
    return doc.dump(2) + "\n";
}

ParsedWitness parse_witness_document(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("gamma_sd") || !doc.contains("modulus") ||
        !doc.contains("facets") || !doc.contains("vertex_colors"))
        throw validation_error("witness document missing gamma_sd/modulus/facets/vertex_colors");
    int modulus = doc["modulus"].get<int>();
    std::unordered_map<Vertex, int> coloring;
    for (const auto& entry : doc["vertex_colors"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw validation_error("vertex_colors entries must be [vertex, color] pairs");
        coloring[entry[0].get<Vertex>()] = entry[1].get<int>();
    }
    return ParsedWitness{count_vector_from_json(doc["gamma_sd"], VectorRole::Gamma), modulus,
                         ColoredComplex(SimplicialComplex::from_facets(facets_from_json(doc["facets"])),
                                        std::move(coloring), modulus)};
}

namespace {

void check(VerifySuite& suite, bool pass, const std::string& what) {
    if (!pass) {
        suite.pass = false;
        suite.details.push_back(what);
    }
}

VerifySuite suite_table_symmetry(int n_max) {
    VerifySuite s{"eulerian-table-symmetry"};
    for (int n = 1; n <= n_max; ++n) {
        auto t = restricted_eulerian_table(n);
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n; ++j)
                check(s, t->entry(i, j) == t->entry(n - 1 - i, n + 1 - j),
                      "A(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) +
                          ") != mirrored entry");
    }
    return s;
}

VerifySuite suite_edge_columns(int n_max) {
    VerifySuite s{"eulerian-edge-columns"};
    for (int n = 2; n <= n_max; ++n) {
        check(s, restricted_eulerian_polynomial(n, 1) == eulerian_polynomial(n - 1),
              "first column at n = " + std::to_string(n));
        check(s, restricted_eulerian_polynomial(n, n) == eulerian_polynomial(n - 1).times_power(1),
              "last column at n = " + std::to_string(n));
    }
    return s;
}

VerifySuite suite_recurrence(int n_max) {
    VerifySuite s{"eulerian-recurrence"};
    for (int n = 2; n <= n_max; ++n) {
        auto t = restricted_eulerian_table(n);
        auto prev = restricted_eulerian_table(n - 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Int expected = 0;
                for (int k = 1; k <= j - 1; ++k)
                    if (i >= 1) expected += prev->entry(i - 1, k);
                for (int k = j; k <= n - 1; ++k)
                    if (i <= n - 2) expected += prev->entry(i, k);
                check(s, t->entry(i, j) == expected,
                      "recurrence at A(" + std::to_string(n) + "," + std::to_string(i) + "," +
                          std::to_string(j) + ")");
            }
        }
    }
    return s;
}

VerifySuite suite_oracle(int n_max, int enum_cap) {
    VerifySuite s{"oracle-equivalence"};
    for (int n = 1; n <= std::min(n_max, enum_cap); ++n)
        check(s, *restricted_eulerian_table(n) == restricted_eulerian_table_by_enumeration(n, enum_cap),
              "recurrence vs enumeration at n = " + std::to_string(n));
    return s;
}

VerifySuite suite_gamma_recurrences(int n_max) {
    VerifySuite s{"gamma-recurrences"};
    for (int n = 3; n <= n_max; ++n) {
        auto rep = verify_gamma_recurrences(n);
        for (const auto& c : rep.checks)
            check(s, c.pass, c.name + " at n = " + std::to_string(n) + ", j = " + std::to_string(c.j) +
                                 ": " + c.detail);
    }
    return s;
}

VerifySuite suite_gamma_growth(int n_max) {
    VerifySuite s{"gamma-growth"};
    auto rep = verify_gamma_growth(n_max);
    for (const auto& item : rep.items)
        check(s, item.pass, "(i+1)*gamma_i at n = " + std::to_string(item.n) + ", i = " +
                                std::to_string(item.i) + ": " + item.lhs.str() + " > " + item.rhs.str());
    return s;
}

VerifySuite suite_embedding(int) {
    VerifySuite s{"embedding-rank-bound"};
    for (int d = 2; d <= 6; ++d) {
        for (int k = 1; k < d; ++k) {
            for (std::uint64_t a = 1; a <= 50; ++a) {
                check(s, lifted_rank(d, k, a) <= (static_cast<std::uint64_t>(k) + 1) * a,
                      "rank bound at d = " + std::to_string(d) + ", k = " + std::to_string(k) +
                          ", a = " + std::to_string(a));
                auto sub = colored_subset_unrank(d, k, a);
                check(s, colored_subset_rank(sub) == a,
                      "rank/unrank mismatch at d = " + std::to_string(d) + ", k = " + std::to_string(k) +
                          ", a = " + std::to_string(a));
            }
        }
    }
    return s;
}

VerifySuite suite_certificates(int n_max) {
    VerifySuite s{"goodness-certificates"};
    for (int n = 2; n <= n_max; ++n) {
        const bool even = n % 2 == 0;
        const int half = even ? n / 2 : (n + 1) / 2;
        for (int j = 2; j <= half; ++j) {
            auto rep = verify_certificate(*goodness_certificate(n, j, false));
            for (const auto& v : rep.violations) check(s, false, v);
        }
        for (int j = 1; j <= (even ? half : half - 1); ++j) {
            auto rep = verify_certificate(*goodness_certificate(n, j, true));
            for (const auto& v : rep.violations) check(s, false, v);
        }
    }
    return s;
}

VerifySuite suite_gamma_complex(int n_max, int enum_cap) {
    VerifySuite s{"gamma-face-complex"};
    for (int n = 1; n <= std::min(n_max - 1, enum_cap); ++n) {
        ColoredComplex gc = barred_permutation_complex(n, enum_cap);
        check(s, equals_padded(gc.complex().f_vector(), gamma_family(n + 1, 1, false).vec),
              "f-vector mismatch at n = " + std::to_string(n));
        check(s, verify_coloring(gc).proper, "improper coloring at n = " + std::to_string(n));
    }
    return s;
}

}  // namespace

VerifyReport run_verification(int n_max, int threads, int enumeration_cap) {
    if (n_max < 1) throw range_error("verification requires n_max >= 1");
    VerifyReport report;
    report.n_max = n_max;
    std::vector<std::function<VerifySuite()>> jobs = {
        [=] { return suite_table_symmetry(n_max); },
        [=] { return suite_edge_columns(n_max); },
        [=] { return suite_recurrence(n_max); },
        [=] { return suite_oracle(n_max, enumeration_cap); },
        [=] { return n_max >= 3 ? suite_gamma_recurrences(n_max) : VerifySuite{"gamma-recurrences"}; },
        [=] { return suite_gamma_growth(n_max); },
        [=] { return suite_embedding(n_max); },
        [=] { return n_max >= 2 ? suite_certificates(n_max) : VerifySuite{"goodness-certificates"}; },
        [=] { return suite_gamma_complex(n_max, enumeration_cap); },
    };
    if (threads <= 1) {
        for (auto& job : jobs) report.suites.push_back(job());
    } else {
        std::vector<std::future<VerifySuite>> futures;
        futures.reserve(jobs.size());
        for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
        for (auto& f : futures) report.suites.push_back(f.get());
    }
    for (const auto& s : report.suites) report.all_pass = report.all_pass && s.pass;
    return report;
}

std::string render_text(const VerifyReport& rep) {
    std::ostringstream os;
    for (const auto& s : rep.suites) {
        os << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << "\n";
        for (const auto& d : s.details) os << "       " << d << "\n";
    }
    os << (rep.all_pass ? "all suites passed" : "FAILURES PRESENT") << " (n_max = " << rep.n_max << ")\n";
    return os.str();
}

std::string render_json(const VerifyReport& rep) {
    json doc;
    doc["format"] = kFormatVersion;
    doc["command"] = "verify";
    doc["n_max"] = rep.n_max;
    json suites = json::array();
    for (const auto& s : rep.suites) {
        json j;
        j["name"] = s.name;
        j["pass"] = s.pass;
        j["details"] = s.details;
        suites.push_back(std::move(j));
    }
    doc["suites"] = std::move(suites);
    doc["all_pass"] = rep.all_pass;
    return doc.dump(2) + "\n";
}

}  // namespace sdgamma
