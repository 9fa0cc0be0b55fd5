#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdgamma/poly.hpp"
#include "sdgamma/types.hpp"

namespace sdgamma {

// A face: strictly increasing vertex ids. The empty face is a valid Face.
class Face {
public:
    Face() = default;
    // Sorts and validates; throws validation_error on a repeated vertex.
    explicit Face(std::vector<Vertex> vertices);
    static Face from_sorted_unchecked(std::vector<Vertex> vertices);

    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return verts_; }

    bool has_vertex(Vertex v) const;
    // Subset test: does this face contain every vertex of `other`?
    bool contains(const Face& other) const;
    // Face with the vertex at position `index` removed.
    Face without(std::size_t index) const;
    // Union with a disjoint face.
    Face united(const Face& other) const;

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
    // Order by (size, lexicographic) — the deterministic order used throughout.
    friend bool operator<(const Face& a, const Face& b);

    std::string to_string() const;  // "{1, 2, 4}"

private:
    std::vector<Vertex> verts_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const;
};

inline constexpr std::size_t kDefaultFaceCap = 20'000'000;

// Abstract simplicial complex stored by its facets (an inclusion antichain).
// Downward closure is implicit: faces are the subsets of facets. The complex
// containing only the empty face is represented by the single facet {}.
class SimplicialComplex {
public:
    // The complex containing only the empty face.
    SimplicialComplex() : facets_{Face()} {}

    // Sorts each facet, rejects repeated vertices inside one facet, drops
    // duplicates and dominated facets. An empty list yields the {∅} complex.
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets);

    // Builds from an explicit list of faces: validates downward closure
    // (throws validation_error if some subset is missing) and derives the
    // facets. The empty face is implied and need not be listed.
    static SimplicialComplex from_faces(const std::vector<Face>& faces);

    // The caller guarantees the antichain property.
    static SimplicialComplex from_facets_unchecked(std::vector<Face> facets);

    const std::vector<Face>& facets() const { return facets_; }
    // dim ∅-complex = -1.
    int dimension() const;
    bool is_pure() const;
    std::vector<Vertex> vertices() const;
    std::size_t vertex_count() const { return vertices().size(); }
    // Smallest id strictly above every vertex in use (1 for the ∅ complex).
    Vertex fresh_vertex() const;
    bool contains_face(const Face& f) const;

    // All faces including ∅, sorted by (size, lex). Throws capacity_error
    // if more than `cap` faces would be produced.
    std::vector<Face> all_faces(std::size_t cap = kDefaultFaceCap) const;

    // (f_0, ..., f_d) with f_0 = 1. Cached after the first call.
    CountVector f_vector(std::size_t cap = kDefaultFaceCap) const;

    // Complex of chains of nonempty faces. Vertices of the result are the
    // nonempty faces of this complex, numbered 1..N in (cardinality, lex)
    // order; `vertex_faces` (when non-null) receives that numbering.
    SimplicialComplex barycentric_subdivision(std::vector<Face>* vertex_faces = nullptr,
                                              std::size_t cap = kDefaultFaceCap) const;

    // Copy with every vertex id shifted by `offset`.
    SimplicialComplex relabeled(std::int64_t offset) const;

    // Join with a fresh apex vertex (= max id + 1).
    SimplicialComplex cone() const;
    // Join with two fresh vertices.
    SimplicialComplex suspension() const;

private:
    std::vector<Face> facets_;
    // Face counts are computed once per complex; copies share the cache.
    struct FVectorCache {
        std::once_flag flag;
        CountVector value;
    };
    std::shared_ptr<FVectorCache> f_cache_ = std::make_shared<FVectorCache>();
};

// { F ∪ G : F ∈ a, G ∈ b }. Vertex sets must be disjoint; relabel first.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Union of two complexes (facet lists merged, antichain restored).
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

// A complex together with a vertex coloring into {1..num_colors}.
class ColoredComplex {
public:
    ColoredComplex(SimplicialComplex complex, std::unordered_map<Vertex, int> coloring, int num_colors);

    const SimplicialComplex& complex() const { return complex_; }
    const std::unordered_map<Vertex, int>& coloring() const { return coloring_; }
    int num_colors() const { return num_colors_; }
    int color_of(Vertex v) const;

private:
    SimplicialComplex complex_;
    std::unordered_map<Vertex, int> coloring_;
    int num_colors_;
};

struct ColoringReport {
    bool proper = false;
    // proper and num_colors == dim + 1
    bool balanced = false;
    std::string violation;  // empty when proper
};

// True iff every facet (hence every face) has pairwise distinct colors.
// Throws coloring_error if some vertex is missing from the coloring map or
// a color falls outside {1..num_colors}.
ColoringReport verify_coloring(const ColoredComplex& cc);

// Cone over a colored complex with an apex carrying `apex_color`. The apex
// joins every face, so the color must be unused; otherwise throws
// coloring_error. The apex id defaults to max id + 1; pass one explicitly
// when the result will be merged into a larger complex.
ColoredComplex cone_colored(const ColoredComplex& cc, int apex_color,
                            std::optional<Vertex> apex = std::nullopt);

}  // namespace sdgamma
