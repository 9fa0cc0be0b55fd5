#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdgamma/types.hpp"

namespace sdgamma {

// Exact-integer polynomial in one variable, coefficient of t^i at index i.
// Trailing zero coefficients are allowed in storage; equality ignores them.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

    // -1 for the zero polynomial.
    int degree() const;

    // Zero-extended access beyond the stored coefficients.
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return degree() < 0; }

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { a += b; return a; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { a -= b; return a; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    IntPolynomial scaled(const Int& c) const;
    // Multiplication by t^k.
    IntPolynomial times_power(std::size_t k) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // "1 + 11t + 11t^2 + t^3"; "0" for the zero polynomial.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
    std::vector<Int> coeffs_;
};

enum class VectorRole { F, H, G, Gamma };

// Exact-integer sequence standing in for an f-, h-, g- or gamma-vector.
// The role is bookkeeping only and is ignored by comparisons.
class CountVector {
public:
    CountVector() = default;
    CountVector(std::initializer_list<long long> entries, VectorRole role = VectorRole::F);
    explicit CountVector(std::vector<Int> entries, VectorRole role = VectorRole::F)
        : entries_(std::move(entries)), role_(role) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    Int& operator[](std::size_t i) { return entries_[i]; }
    // Zero-extended access.
    const Int& at_or_zero(std::size_t i) const;

    const std::vector<Int>& entries() const { return entries_; }
    VectorRole role() const { return role_; }
    CountVector with_role(VectorRole role) const { return CountVector(entries_, role); }

    void push_back(Int v) { entries_.push_back(std::move(v)); }

    bool is_nonnegative() const;
    // Copy without trailing zeros.
    CountVector trimmed() const;
    // Copy with k zeros prepended.
    CountVector shifted(std::size_t k) const;
    CountVector scaled(const Int& c) const;

    IntPolynomial to_polynomial() const { return IntPolynomial(entries_); }

    // Entrywise; roles are ignored, trailing zeros are significant.
    friend bool operator==(const CountVector& a, const CountVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const CountVector& a, const CountVector& b) { return !(a == b); }

    std::string to_string() const;  // "(1, 22, 16)"
    friend std::ostream& operator<<(std::ostream& os, const CountVector& v);

private:
    std::vector<Int> entries_;
    VectorRole role_ = VectorRole::F;
};

// Entrywise sum/equality with zero padding to the longer length.
CountVector plus_padded(const CountVector& a, const CountVector& b);
bool equals_padded(const CountVector& a, const CountVector& b);

// Binomial coefficient with an internal Pascal-triangle cache; safe for
// concurrent callers. C(n, k) = 0 for k < 0 or k > n.
Int binomial(int n, int k);

}  // namespace sdgamma
