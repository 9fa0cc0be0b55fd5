#include "sdgamma/eulerian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "sdgamma/errors.hpp"
#include "sdgamma/transforms.hpp"

namespace sdgamma {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw validation_error("word is not a permutation of {1.." +
                                   std::to_string(word_.size()) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

int descent_number(const Permutation& w) {
    int d = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) ++d;
    return d;
}

RestrictedEulerianTable::RestrictedEulerianTable(int n, std::vector<std::vector<Int>> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw range_error("table requires n >= 1");
}

const Int& RestrictedEulerianTable::entry(int descents, int first_letter) const {
    if (descents < 0 || descents > n_ - 1 || first_letter < 1 || first_letter > n_)
        throw range_error("table index (" + std::to_string(descents) + ", " +
                          std::to_string(first_letter) + ") out of range for n = " + std::to_string(n_));
    return entries_[static_cast<std::size_t>(descents)][static_cast<std::size_t>(first_letter - 1)];
}

IntPolynomial RestrictedEulerianTable::column_polynomial(int first_letter) const {
    std::vector<Int> coeffs(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) coeffs[static_cast<std::size_t>(i)] = entry(i, first_letter);
    return IntPolynomial(std::move(coeffs));
}

Int RestrictedEulerianTable::total() const {
    Int t = 0;
    for (const auto& row : entries_)
        for (const Int& v : row) t += v;
    return t;
}

std::shared_ptr<const RestrictedEulerianTable> restricted_eulerian_table(int n) {
    if (n < 1) throw range_error("restricted_eulerian_table requires n >= 1");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const RestrictedEulerianTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    // Build every level up to n. A(m,i,j) = sum_{k<j} A(m-1,i-1,k)
    // + sum_{k>=j} A(m-1,i,k); prefix sums make each level O(m^2).
    std::vector<std::vector<Int>> prev{{Int(1)}};  // level 1
    auto publish = [&](int m, std::vector<std::vector<Int>> entries) {
        auto table = std::make_shared<const RestrictedEulerianTable>(m, std::move(entries));
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(m, table);
        return table;
    };
    if (n == 1) return publish(1, prev);

    std::shared_ptr<const RestrictedEulerianTable> result;
    for (int m = 2; m <= n; ++m) {
        // prefix[i][j] = sum_{k<=j} A(m-1, i, k), j in 0..m-1 (j=0 is zero).
        std::vector<std::vector<Int>> prefix(prev.size(), std::vector<Int>(static_cast<std::size_t>(m)));
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (int j = 1; j <= m - 1; ++j)
                prefix[i][static_cast<std::size_t>(j)] =
                    prefix[i][static_cast<std::size_t>(j - 1)] + prev[i][static_cast<std::size_t>(j - 1)];
        std::vector<std::vector<Int>> cur(static_cast<std::size_t>(m),
                                          std::vector<Int>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i) {
            for (int j = 1; j <= m; ++j) {
                Int v = 0;
                if (i >= 1 && i - 1 <= m - 2) v += prefix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                if (i <= m - 2)
                    v += prefix[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1)] -
                         prefix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
                cur[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = std::move(v);
            }
        }
        result = publish(m, cur);
        prev = std::move(cur);
    }
    return result;
}

RestrictedEulerianTable restricted_eulerian_table_by_enumeration(int n, int cap) {
    if (n < 1) throw range_error("enumeration requires n >= 1");
    if (n > cap)
        throw capacity_error("enumeration of S_" + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(n),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(n)));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) ++d;
        ++counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(w[0] - 1)];
    } while (std::next_permutation(w.begin(), w.end()));
    std::vector<std::vector<Int>> entries(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        entries[i].assign(counts[i].begin(), counts[i].end());
    return RestrictedEulerianTable(n, std::move(entries));
}

IntPolynomial restricted_eulerian_polynomial(int n, int j) {
    if (j < 1 || j > n) throw range_error("first letter " + std::to_string(j) + " out of 1.." + std::to_string(n));
    return restricted_eulerian_table(n)->column_polynomial(j);
}

IntPolynomial eulerian_polynomial(int n) {
    auto table = restricted_eulerian_table(n);
    IntPolynomial sum;
    for (int j = 1; j <= n; ++j) sum += table->column_polynomial(j);
    return sum;
}

IntPolynomial symmetric_restricted_polynomial(int n, int j) {
    if (j < 1 || j > n) throw range_error("first letter " + std::to_string(j) + " out of 1.." + std::to_string(n));
    j = std::min(j, n + 1 - j);
    if (2 * j == n + 1) return restricted_eulerian_polynomial(n, j);
    return restricted_eulerian_polynomial(n, j) + restricted_eulerian_polynomial(n, n + 1 - j);
}

IntPolynomial primed_restricted_polynomial(int n, int j) {
    if (j < 1 || 2 * j >= n + 1)
        throw range_error("primed family requires 1 <= j < (n+1)/2; got j = " + std::to_string(j) +
                          ", n = " + std::to_string(n));
    return restricted_eulerian_polynomial(n, j).times_power(1) +
           restricted_eulerian_polynomial(n, n + 1 - j);
}

GammaFamily gamma_family(int n, int j, bool primed) {
    GammaFamily fam;
    fam.n = n;
    fam.j = std::min(j, n + 1 - j);
    fam.primed = primed;
    if (primed)
        fam.vec = gamma_from_symmetric(primed_restricted_polynomial(n, j), n);
    else
        fam.vec = gamma_from_symmetric(symmetric_restricted_polynomial(n, j), n - 1);
    return fam;
}

GammaRecurrenceReport verify_gamma_recurrences(int n) {
    if (n < 3) throw range_error("gamma recurrences need n >= 3");
    GammaRecurrenceReport report;
    report.n = n;
    auto record = [&](std::string name, int j, const CountVector& lhs, const CountVector& rhs) {
        IdentityCheck check;
        check.name = std::move(name);
        check.j = j;
        check.pass = equals_padded(lhs, rhs);
        if (!check.pass)
            check.detail = "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    };

    // (1) middle column at odd n equals the sum of all primed families below.
    if (n % 2 == 1) {
        CountVector rhs;
        for (int k = 1; k <= (n - 1) / 2; ++k) rhs = plus_padded(rhs, gamma_family(n - 1, k, true).vec);
        record("middle-from-primed", (n + 1) / 2, gamma_family(n, (n + 1) / 2, false).vec, rhs);
    }
    // (2) unprimed columns below the middle.
    for (int j = 1; 2 * j < n + 1; ++j) {
        CountVector rhs;
        for (int k = 1; k <= j - 1; ++k)
            rhs = plus_padded(rhs, gamma_family(n - 1, k, true).vec.scaled(2));
        for (int k = j; k <= n / 2; ++k) rhs = plus_padded(rhs, gamma_family(n - 1, k, false).vec);
        record("unprimed", j, gamma_family(n, j, false).vec, rhs);
    }
    // (3) primed columns; the unprimed summands enter shifted by one slot.
    for (int j = 1; 2 * j < n + 1; ++j) {
        CountVector rhs;
        for (int k = 1; k <= j - 1; ++k) rhs = plus_padded(rhs, gamma_family(n - 1, k, true).vec);
        for (int k = j; k <= n / 2; ++k)
            rhs = plus_padded(rhs, gamma_family(n - 1, k, false).vec.shifted(1).scaled(2));
        record("primed", j, gamma_family(n, j, true).vec, rhs);
    }
    return report;
}

CountVector subdivision_h_vector(const CountVector& h) {
    if (h.empty()) throw dimension_error("subdivision_h_vector: empty h-vector");
    int n = static_cast<int>(h.size()) - 1;
    auto table = restricted_eulerian_table(n + 1);
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Int v = 0;
        for (int j = 0; j <= n; ++j) {
            if (h[static_cast<std::size_t>(j)] == 0) continue;
            v += table->entry(i, j + 1) * h[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = std::move(v);
    }
    return CountVector(std::move(out), VectorRole::H);
}

CountVector subdivision_gamma_vector(const CountVector& h) {
    if (h.empty()) throw dimension_error("subdivision_gamma_vector: empty h-vector");
    int n = static_cast<int>(h.size()) - 1;
    for (int i = 0; 2 * i <= n; ++i)
        if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(n - i)])
            throw hypothesis_error("h-vector is not symmetric: h_" + std::to_string(i) +
                                   " != h_" + std::to_string(n - i));
    if (!h.is_nonnegative()) throw hypothesis_error("h-vector has a negative entry");
    CountVector gamma;
    for (int i = 0; 2 * i <= n; ++i) {
        if (h[static_cast<std::size_t>(i)] == 0) continue;
        gamma = plus_padded(gamma, gamma_family(n + 1, i + 1, false).vec.scaled(h[static_cast<std::size_t>(i)]));
    }
    // Pad to full length floor(n/2)+1 in case high families were skipped.
    std::vector<Int> out(static_cast<std::size_t>(n / 2) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = gamma.at_or_zero(i);
    return CountVector(std::move(out), VectorRole::Gamma);
}

}  // namespace sdgamma
