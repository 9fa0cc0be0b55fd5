#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sdgamma/complex.hpp"
#include "sdgamma/poly.hpp"

namespace sdgamma {

// Set of positive integers, pairwise incongruent modulo d. Colors are the
// residues, represented in {1..d} with residue 0 written as d.
class ColoredSubset {
public:
    ColoredSubset(std::vector<std::uint32_t> elements, int modulus);
    const std::vector<std::uint32_t>& elements() const { return elems_; }
    int modulus() const { return d_; }
    std::size_t size() const { return elems_.size(); }
    // Sorted color set.
    std::vector<int> colors() const;

    friend bool operator==(const ColoredSubset& a, const ColoredSubset& b) {
        return a.d_ == b.d_ && a.elems_ == b.elems_;
    }

private:
    std::vector<std::uint32_t> elems_;
    int d_;
};

// Residue color of a single element, in {1..d}.
int residue_color(std::uint64_t element, int d);

// Reverse-lexicographic comparison of equal-cardinality subsets: the one
// whose largest differing element is bigger is the larger set.
std::strong_ordering revlex_compare(const ColoredSubset& a, const ColoredSubset& b);

// Visits d-colored k-subsets in revlex order until the visitor returns
// false. Throws range_error when k > d (no such subsets).
void for_each_colored_subset(int d, int k,
                             const std::function<bool(const std::vector<std::uint32_t>&)>& visit);

// j-th d-colored k-subset in revlex order, 1-based; inverse of rank.
ColoredSubset colored_subset_unrank(int d, int k, std::uint64_t j);

// 1-based revlex position, computed by counting rather than generation.
std::uint64_t colored_subset_rank(const ColoredSubset& s);

// The elementwise embedding formula: s = (d-1)i + j with 1 <= j <= d-1 maps
// to s + i = di + j, preserving the residue as a color.
std::uint32_t lift_element(std::uint32_t s, int d);

// Order- and color-preserving embedding of (d-1)-colored subsets into
// d-colored subsets, applying lift_element to every element.
ColoredSubset lift_to_modulus(const ColoredSubset& s, int d);

// Position in the modulus-d order of the lifted a-th modulus-(d-1) subset.
// Requires k < d.
std::uint64_t lifted_rank(int d, int k, std::uint64_t a);

// True iff f[0] = f'[0] = 1 and f_k >= f'_k entrywise (shorter side padded
// with zeros).
bool dominates(const CountVector& f, const CountVector& fprime);

inline constexpr std::uint64_t kDefaultElementCap = 50'000'000;

struct FfkResult;

// The family whose (k-1)-dimensional members are the first f_k d-colored
// k-subsets in revlex order. Not necessarily a simplicial complex; the
// closure test decides that.
class CompressedComplex {
public:
    int modulus() const { return d_; }
    // Number of k-element members, k = 0..d.
    std::uint64_t count(std::size_t k) const;
    const CountVector& f() const { return f_; }
    // Flat storage: k*count(k) elements for cardinality k.
    const std::vector<std::uint32_t>& members(std::size_t k) const;
    std::size_t max_cardinality() const { return members_.size() - 1; }

    // Residue coloring of every member has distinct colors by construction;
    // verifies it anyway and reports.
    bool residues_properly_colored() const;

    // Requires the family to be downward closed (throws validation_error
    // otherwise): derives facets and attaches the residue coloring.
    ColoredComplex to_colored_complex() const;

private:
    friend CompressedComplex compressed_complex(const CountVector&, int, std::uint64_t);
    friend FfkResult is_ffk(const CountVector&, int, bool, std::uint64_t);
    int d_ = 1;
    CountVector f_;
    std::vector<std::vector<std::uint32_t>> members_;
};

// Materializes the compressed family for f = (1, f_1, ..., f_d). Entries
// must be nonnegative, f[0] = 1, and f_k = 0 whenever k > d.
CompressedComplex compressed_complex(const CountVector& f, int d,
                                     std::uint64_t element_cap = kDefaultElementCap);

struct FfkViolation {
    std::vector<std::uint32_t> member;          // first member with a missing subset
    std::vector<std::uint32_t> missing_subset;  // one of its absent corank-1 subsets
};

struct FfkResult {
    bool ok = false;
    std::optional<FfkViolation> violation;
    // Present on success when requested: the balanced realization.
    std::optional<CompressedComplex> witness;
};

// Decides whether f is the f-vector of a d-colorable simplicial complex by
// testing downward closure of the compressed family: every corank-1 subset
// of every member must again be a member. Members are scanned in
// (cardinality, revlex) order, so a reported violation is the first one.
FfkResult is_ffk(const CountVector& f, int d, bool want_witness = true,
                 std::uint64_t element_cap = kDefaultElementCap);

// First f_k k-subsets of the positive integers in revlex order for every k
// (no congruence constraint); the standard compression used by the h- and
// g-vector witnesses.
std::vector<std::vector<std::uint32_t>> standard_compressed_members(
    const CountVector& f, std::uint64_t element_cap = kDefaultElementCap);

}  // namespace sdgamma
