#include "sdgamma/poly.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>

namespace sdgamma {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
}

int IntPolynomial::degree() const {
    for (std::size_t i = coeffs_.size(); i > 0; --i)
        if (coeffs_[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return IntPolynomial{};
    std::vector<Int> out(static_cast<std::size_t>(da + db) + 1);
    for (int i = 0; i <= da; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j <= db; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
    std::vector<Int> out(coeffs_);
    for (auto& x : out) x *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::times_power(std::size_t k) const {
    std::vector<Int> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPolynomial(std::move(out));
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const Int& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || i == 0) os << abs.str();
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

CountVector::CountVector(std::initializer_list<long long> entries, VectorRole role) : role_(role) {
    entries_.reserve(entries.size());
    for (long long v : entries) entries_.emplace_back(v);
}

const Int& CountVector::at_or_zero(std::size_t i) const {
    return i < entries_.size() ? entries_[i] : kZero;
}

bool CountVector::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v >= 0; });
}

CountVector CountVector::trimmed() const {
    std::size_t n = entries_.size();
    while (n > 0 && entries_[n - 1] == 0) --n;
    return CountVector(std::vector<Int>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n)), role_);
}

CountVector CountVector::shifted(std::size_t k) const {
    std::vector<Int> out(entries_.size() + k);
    std::copy(entries_.begin(), entries_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return CountVector(std::move(out), role_);
}

CountVector CountVector::scaled(const Int& c) const {
    std::vector<Int> out(entries_);
    for (auto& x : out) x *= c;
    return CountVector(std::move(out), role_);
}

std::string CountVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].str();
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CountVector& v) { return os << v.to_string(); }

CountVector plus_padded(const CountVector& a, const CountVector& b) {
    std::vector<Int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at_or_zero(i) + b.at_or_zero(i);
    return CountVector(std::move(out), a.role());
}

bool equals_padded(const CountVector& a, const CountVector& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.at_or_zero(i) != b.at_or_zero(i)) return false;
    return true;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    static std::mutex mutex;
    static std::vector<std::vector<Int>> rows{{1}};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Int> row(rows.size() + 1, 1);
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace sdgamma
