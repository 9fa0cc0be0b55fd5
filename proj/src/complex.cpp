#include "sdgamma/complex.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sdgamma/errors.hpp"

namespace sdgamma {

Face::Face(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    for (std::size_t i = 1; i < verts_.size(); ++i)
        if (verts_[i] == verts_[i - 1])
            throw validation_error("face has repeated vertex " + std::to_string(verts_[i]));
}

Face Face::from_sorted_unchecked(std::vector<Vertex> vertices) {
    Face f;
    f.verts_ = std::move(vertices);
    return f;
}

bool Face::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::contains(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
}

Face Face::without(std::size_t index) const {
    std::vector<Vertex> out;
    out.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != index) out.push_back(verts_[i]);
    return from_sorted_unchecked(std::move(out));
}

Face Face::united(const Face& other) const {
    std::vector<Vertex> out;
    out.reserve(verts_.size() + other.verts_.size());
    std::merge(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
               std::back_inserter(out));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw disjointness_error("faces share vertex " + std::to_string(out[i]));
    return from_sorted_unchecked(std::move(out));
}

bool operator<(const Face& a, const Face& b) {
    if (a.verts_.size() != b.verts_.size()) return a.verts_.size() < b.verts_.size();
    return a.verts_ < b.verts_;
}

std::string Face::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ", ";
        os << verts_[i];
    }
    os << "}";
    return os.str();
}

std::size_t FaceHash::operator()(const Face& f) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : f.vertices()) {
        h ^= v + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
    std::vector<Face> sorted;
    sorted.reserve(facets.size());
    for (const auto& f : facets) sorted.emplace_back(f);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Antichain reduction: a facet survives unless a larger one contains it.
    std::vector<Face> kept;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < sorted.size() && !dominated; ++j)
            if (sorted[j].size() > sorted[i].size() && sorted[j].contains(sorted[i])) dominated = true;
        if (!dominated) kept.push_back(sorted[i]);
    }
    if (kept.empty()) kept.emplace_back();  // the {∅} complex
    SimplicialComplex c;
    c.facets_ = std::move(kept);
    return c;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces) {
    std::unordered_set<Face, FaceHash> present(faces.begin(), faces.end());
    present.insert(Face());
    std::unordered_set<Face, FaceHash> covered;
    for (const Face& f : present) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f.without(i);
            if (!present.count(sub))
                throw validation_error("face family is not downward closed: " + f.to_string() +
                                       " present but " + sub.to_string() + " missing");
            covered.insert(std::move(sub));
        }
    }
    std::vector<Face> facets;
    for (const Face& f : present)
        if (!covered.count(f)) facets.push_back(f);
    std::sort(facets.begin(), facets.end());
    if (facets.empty()) facets.emplace_back();
    SimplicialComplex c;
    c.facets_ = std::move(facets);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets_unchecked(std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    if (facets.empty()) facets.emplace_back();
    SimplicialComplex c;
    c.facets_ = std::move(facets);
    return c;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (f.dim() != dimension()) return false;
    return true;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::set<Vertex> vs;
    for (const Face& f : facets_) vs.insert(f.vertices().begin(), f.vertices().end());
    return std::vector<Vertex>(vs.begin(), vs.end());
}

Vertex SimplicialComplex::fresh_vertex() const {
    Vertex m = 0;
    for (const Face& f : facets_)
        if (!f.empty()) m = std::max(m, f.vertices().back());
    return m + 1;
}

bool SimplicialComplex::contains_face(const Face& f) const {
    for (const Face& g : facets_)
        if (g.contains(f)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
    std::unordered_set<Face, FaceHash> seen;
    seen.insert(Face());
    for (const Face& facet : facets_) {
        const auto& vs = facet.vertices();
        if (vs.size() >= 26)
            throw capacity_error("facet with " + std::to_string(vs.size()) +
                                 " vertices: face enumeration would blow up");
        for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
            std::vector<Vertex> sub;
            sub.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask & (1u << i)) sub.push_back(vs[i]);
            seen.insert(Face::from_sorted_unchecked(std::move(sub)));
            if (seen.size() > cap)
                throw capacity_error("face enumeration exceeds cap of " + std::to_string(cap));
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

CountVector SimplicialComplex::f_vector(std::size_t cap) const {
    std::call_once(f_cache_->flag, [&] {
        std::vector<Int> counts(static_cast<std::size_t>(dimension() + 2));
        for (const Face& f : all_faces(cap)) counts[f.size()] += 1;
        f_cache_->value = CountVector(std::move(counts), VectorRole::F);
    });
    return f_cache_->value;
}

SimplicialComplex SimplicialComplex::barycentric_subdivision(std::vector<Face>* vertex_faces,
                                                             std::size_t cap) const {
    std::vector<Face> parents = all_faces(cap);
    // all_faces is sorted by (cardinality, lex); drop ∅ and number from 1.
    parents.erase(parents.begin());
    std::unordered_map<Face, Vertex, FaceHash> id;
    for (std::size_t i = 0; i < parents.size(); ++i) id[parents[i]] = static_cast<Vertex>(i + 1);
    if (vertex_faces) *vertex_faces = parents;

    // Maximal chains are complete flags under a facet: one per ordering of
    // the facet's vertices, read as prefix sets.
    std::size_t total = 0;
    std::vector<Face> chains;
    for (const Face& facet : facets_) {
        if (facet.empty()) continue;
        std::vector<Vertex> perm = facet.vertices();
        std::size_t count = 1;
        for (std::size_t i = 2; i <= perm.size(); ++i) count *= i;
        total += count;
        if (total > cap) throw capacity_error("subdivision facet count exceeds cap");
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<Vertex> chain(perm.size());
            std::vector<Vertex> prefix;
            prefix.reserve(perm.size());
            for (std::size_t i = 0; i < perm.size(); ++i) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), perm[i]), perm[i]);
                chain[i] = id.at(Face::from_sorted_unchecked(prefix));
            }
            std::sort(chain.begin(), chain.end());
            chains.push_back(Face::from_sorted_unchecked(std::move(chain)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return from_facets_unchecked(std::move(chains));
}

SimplicialComplex SimplicialComplex::relabeled(std::int64_t offset) const {
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (const Face& f : facets_) {
        std::vector<Vertex> vs;
        vs.reserve(f.size());
        for (Vertex v : f.vertices()) {
            std::int64_t nv = static_cast<std::int64_t>(v) + offset;
            if (nv < 0 || nv > static_cast<std::int64_t>(std::numeric_limits<Vertex>::max()))
                throw range_error("relabel: vertex id out of range");
            vs.push_back(static_cast<Vertex>(nv));
        }
        out.push_back(Face::from_sorted_unchecked(std::move(vs)));
    }
    return from_facets_unchecked(std::move(out));
}

SimplicialComplex SimplicialComplex::cone() const {
    Vertex apex = fresh_vertex();
    return join(*this, from_facets({{apex}}));
}

SimplicialComplex SimplicialComplex::suspension() const {
    Vertex v = fresh_vertex();
    return join(*this, from_facets({{v}, {v + 1}}));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto va = a.vertices();
    auto vb = b.vertices();
    std::vector<Vertex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty())
        throw disjointness_error("join: vertex sets overlap at id " + std::to_string(common.front()));
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets()) facets.push_back(f.united(g));
    return SimplicialComplex::from_facets_unchecked(std::move(facets));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<Vertex>> facets;
    for (const Face& f : a.facets()) facets.push_back(f.vertices());
    for (const Face& f : b.facets()) facets.push_back(f.vertices());
    return SimplicialComplex::from_facets(facets);
}

ColoredComplex::ColoredComplex(SimplicialComplex complex, std::unordered_map<Vertex, int> coloring,
                               int num_colors)
    : complex_(std::move(complex)), coloring_(std::move(coloring)), num_colors_(num_colors) {
    if (num_colors_ < 0) throw range_error("ColoredComplex: negative color count");
}

int ColoredComplex::color_of(Vertex v) const {
    auto it = coloring_.find(v);
    if (it == coloring_.end())
        throw coloring_error("vertex " + std::to_string(v) + " missing from coloring map");
    return it->second;
}

ColoringReport verify_coloring(const ColoredComplex& cc) {
    for (Vertex v : cc.complex().vertices()) {
        int c = cc.color_of(v);  // throws if missing
        if (c < 1 || c > cc.num_colors())
            throw coloring_error("vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                                 " outside {1.." + std::to_string(cc.num_colors()) + "}");
    }
    ColoringReport report;
    report.proper = true;
    for (const Face& f : cc.complex().facets()) {
        std::vector<int> colors;
        colors.reserve(f.size());
        for (Vertex v : f.vertices()) colors.push_back(cc.color_of(v));
        std::sort(colors.begin(), colors.end());
        auto dup = std::adjacent_find(colors.begin(), colors.end());
        if (dup != colors.end()) {
            report.proper = false;
            report.violation = "facet " + f.to_string() + " repeats color " + std::to_string(*dup);
            break;
        }
    }
    report.balanced = report.proper && cc.num_colors() == cc.complex().dimension() + 1;
    return report;
}

ColoredComplex cone_colored(const ColoredComplex& cc, int apex_color, std::optional<Vertex> apex) {
    if (apex_color < 1 || apex_color > cc.num_colors())
        throw range_error("apex color " + std::to_string(apex_color) + " outside {1.." +
                          std::to_string(cc.num_colors()) + "}");
    for (Vertex v : cc.complex().vertices())
        if (cc.color_of(v) == apex_color)
            throw coloring_error("apex color " + std::to_string(apex_color) +
                                 " already used by vertex " + std::to_string(v));
    Vertex apex_id = apex.value_or(cc.complex().fresh_vertex());
    auto vs = cc.complex().vertices();
    if (std::binary_search(vs.begin(), vs.end(), apex_id))
        throw validation_error("apex id " + std::to_string(apex_id) + " is already a vertex");
    auto coloring = cc.coloring();
    coloring[apex_id] = apex_color;
    return ColoredComplex(join(cc.complex(), SimplicialComplex::from_facets({{apex_id}})),
                          std::move(coloring), cc.num_colors());
}

}  // namespace sdgamma
