#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdgamma/poly.hpp"

namespace sdgamma {

// One-line permutation word on {1..n}.
class Permutation {
public:
    explicit Permutation(std::vector<int> word);
    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
    const std::vector<int>& word() const { return word_; }

private:
    std::vector<int> word_;
};

// Number of positions i with w(i) > w(i+1).
int descent_number(const Permutation& w);

inline constexpr int kDefaultEnumerationCap = 10;

// Counts A(n,i,j) of permutations of {1..n} with first letter j and i
// descents, 0 <= i <= n-1, 1 <= j <= n.
class RestrictedEulerianTable {
public:
    RestrictedEulerianTable(int n, std::vector<std::vector<Int>> entries);
    int n() const { return n_; }
    const Int& entry(int descents, int first_letter) const;
    // A_{n,j}(t), the descent generating function of the j-th column.
    IntPolynomial column_polynomial(int first_letter) const;
    Int total() const;  // must be n!

    friend bool operator==(const RestrictedEulerianTable& a, const RestrictedEulerianTable& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    std::vector<std::vector<Int>> entries_;  // [i][j-1]
};

// Bottom-up recurrence with running prefix sums; memoized per n and safe for
// concurrent callers.
std::shared_ptr<const RestrictedEulerianTable> restricted_eulerian_table(int n);

// Exhaustive count over all n! permutations; the oracle for the recurrence.
RestrictedEulerianTable restricted_eulerian_table_by_enumeration(int n,
                                                                 int cap = kDefaultEnumerationCap);

// A_{n,j}(t).
IntPolynomial restricted_eulerian_polynomial(int n, int j);

// A_n(t), the column sum over all first letters.
IntPolynomial eulerian_polynomial(int n);

// Descent generating function over permutations starting with j or n+1-j;
// coefficients are symmetric about (n-1)/2. j is canonicalized to
// min(j, n+1-j).
IntPolynomial symmetric_restricted_polynomial(int n, int j);

// t*A_{n,j}(t) + A_{n,n+1-j}(t) for 1 <= j < (n+1)/2; symmetric about n/2.
// Out-of-range j (including everything at n = 1) throws range_error.
IntPolynomial primed_restricted_polynomial(int n, int j);

struct GammaFamily {
    int n = 0;
    int j = 0;
    bool primed = false;
    CountVector vec;
};

// Gamma vector of the symmetric (axis n-1) or primed (axis n) restricted
// polynomial.
GammaFamily gamma_family(int n, int j, bool primed);

struct IdentityCheck {
    std::string name;
    int j = 0;
    bool pass = false;
    std::string detail;
};

struct GammaRecurrenceReport {
    int n = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

// Checks the three recurrences tying gamma families at n to families at n-1,
// each side computed independently. Failures are reported, not thrown.
GammaRecurrenceReport verify_gamma_recurrences(int n);

// h-vector of the barycentric subdivision from the h-vector of the complex:
// h_i(sd) = sum_j A(n+1, i, j+1) h_j. No symmetry of h is required.
CountVector subdivision_h_vector(const CountVector& h);

// Gamma vector of the subdivision for symmetric nonnegative h, as the
// h-weighted sum of the gamma families at n+1. Throws hypothesis_error on
// asymmetric or negative input.
CountVector subdivision_gamma_vector(const CountVector& h);

}  // namespace sdgamma
