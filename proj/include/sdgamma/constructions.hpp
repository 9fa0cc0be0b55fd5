#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdgamma/complex.hpp"
#include "sdgamma/eulerian.hpp"
#include "sdgamma/ffk.hpp"
#include "sdgamma/poly.hpp"

namespace sdgamma {

// Permutation of {1..n} written as bars at the descent positions, i.e. an
// ordered list of increasing blocks. Valid words have no double descents and
// no final descent: every block after the first has at least two elements,
// and max(B_i) > min(B_{i+1}) for consecutive blocks.
class BarredPermutation {
public:
    static BarredPermutation from_word(const std::vector<int>& word);
    explicit BarredPermutation(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::vector<int> word() const;
    int size() const;
    int descent_count() const { return static_cast<int>(blocks_.size()) - 1; }
    // Sorted union of the first `count` blocks.
    std::vector<int> prefix_set(std::size_t count) const;

private:
    std::vector<std::vector<int>> blocks_;
};

// Complex whose faces are the block decompositions above: a face of
// dimension d(w)-1 per word w, vertices are the one-bar words, incidence by
// merging blocks on each side of a bar. Vertices are numbered 1..V in
// (cardinality, lex) order of their left block; the color of a vertex with
// bar position p is ceil(p/2). Its f-vector realizes the leading gamma
// family one level up.
ColoredComplex barred_permutation_complex(int n, int cap = kDefaultEnumerationCap);

struct GammaGrowthReport {
    bool all_pass = true;
    struct Item {
        int n;
        int i;
        Int lhs, rhs;  // (i+1)*gamma_i at n vs gamma_i at n+1
        bool pass;
    };
    std::vector<Item> items;
};

// Checks (i+1)*gamma_i^{(n,1)} <= gamma_i^{(n+1,1)} for all n <= n_max.
GammaGrowthReport verify_gamma_growth(int n_max);

// Lattice path word over {N, E} whose prefixes never have more N than E.
class BallotPath {
public:
    explicit BallotPath(std::string word);
    const std::string& word() const { return word_; }
    // { k+1-i : p_i = N }, the north-step positions read from the right.
    std::vector<Vertex> north_set() const;

private:
    std::string word_;
};

// Complex of north-step position sets of ballot paths of length k, on
// vertex set {1..k-1}; f_i = C(k,i) - C(k,i-1) and the facet count is a
// Catalan number.
SimplicialComplex ballot_complex(int k);

// Complex with f-vector h_i = sum_j gamma_j * C(d-2j, i-j): compressed
// family for gamma joined with full simplices on fresh vertices. gamma must
// pass is_ffk at modulus floor(d/2).
SimplicialComplex h_vector_witness(const CountVector& gamma, int d);

// Complex with f-vector g_i = sum_j gamma_j * (C(d-2j,i-j) - C(d-2j,i-j-1)):
// same shape with ballot complexes in place of simplices.
SimplicialComplex g_vector_witness(const CountVector& gamma, int d);

// Balanced complex with f-vector h built from a properly colored complex
// realizing gamma (colors within {1..floor(d/2)}) by attaching faces over
// the reserved palette {1..d}; new vertex i carries color i. Vertex ids of
// the input must avoid {1..d} (throws relabel_error otherwise).
ColoredComplex balanced_h_vector_witness(const ColoredComplex& cc, int d);

enum class CertRule {
    DegeneratePrimed,   // primed j = 1: two copies of the reference
    EvenUnprimed,       // even n, unprimed j in 2..n/2
    EvenPrimed,         // even n, primed j in 2..n/2
    OddUnprimedMiddle,  // odd n, unprimed j = (n+1)/2
    OddUnprimed,        // odd n, unprimed j in 2..(n-1)/2
    OddPrimed,          // odd n, primed j in 2..(n-1)/2
};

struct CertificateLeaf {
    CountVector vec;   // an FFK summand, entering shifted one slot right
    int ffk_level;     // claimed modulus
    int multiplicity;  // 1 or 2
    std::string label;
};

// Certifies that a gamma-family vector decomposes into FFK summands that the
// leading family absorbs: reference + target is level-FFK. Nodes share
// subcertificates; the sum identity holds at every node and the absorption
// conditions hold against every ancestor reference.
struct GoodnessCertificate {
    int n = 0;
    int j = 0;
    bool primed = false;
    int level = 0;  // target is level-good for the reference
    CertRule rule = CertRule::DegeneratePrimed;
    CountVector target;     // gamma family at (n, j)
    CountVector reference;  // leading gamma family at n
    std::vector<CertificateLeaf> leaves;
    std::vector<std::pair<std::shared_ptr<const GoodnessCertificate>, int>> children;  // with multiplicity
    std::string note;
};

// Builds the certificate recursively, bottoming out at n = 2. Throws
// range_error outside the admissible (n, j, primed) ranges. Memoized.
std::shared_ptr<const GoodnessCertificate> goodness_certificate(int n, int j, bool primed);

struct CertificateReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

// Independent re-check of a certificate: sum identities at every node, FFK
// status of every summand, domination or (i+1)-scaled domination against
// each node's reference, and the composite closure test at the claimed
// level. Failures are reported, not thrown.
CertificateReport verify_certificate(const GoodnessCertificate& cert);

struct SubdivisionWitness {
    CountVector gamma;           // gamma vector of the subdivision
    CompressedComplex witness;   // balanced realization, f(witness) = gamma
};

// End-to-end pipeline: from a symmetric nonnegative h-vector with h_0 = 1,
// computes the gamma vector of the subdivision and realizes it as a
// balanced compressed complex. A closure failure would contradict the
// realizability guarantee and raises refutation_error.
SubdivisionWitness subdivision_gamma_witness(const CountVector& h,
                                             std::uint64_t element_cap = kDefaultElementCap);

}  // namespace sdgamma
