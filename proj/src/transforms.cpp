#include "sdgamma/transforms.hpp"

#include <string>

#include "sdgamma/errors.hpp"

namespace sdgamma {

namespace {

// Sum_i v_i t^i (1 + sign*t)^(d-i), the common core of both substitutions.
CountVector binomial_substitution(const CountVector& v, int d, int sign, VectorRole role) {
    if (static_cast<int>(v.size()) != d + 1)
        throw dimension_error("vector has length " + std::to_string(v.size()) +
                              ", expected d+1 = " + std::to_string(d + 1));
    std::vector<Int> out(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        for (int m = 0; m <= d - i; ++m) {
            Int term = v[static_cast<std::size_t>(i)] * binomial(d - i, m);
            if (sign < 0 && (m & 1)) term = -term;
            out[static_cast<std::size_t>(i + m)] += term;
        }
    }
    return CountVector(std::move(out), role);
}

}  // namespace

CountVector h_from_f(const CountVector& f, int d) {
    return binomial_substitution(f, d, -1, VectorRole::H);
}

CountVector f_from_h(const CountVector& h, int d) {
    return binomial_substitution(h, d, +1, VectorRole::F);
}

CountVector g_from_h(const CountVector& h) {
    if (h.empty()) throw dimension_error("g_from_h: empty h-vector");
    int d = static_cast<int>(h.size()) - 1;
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(d / 2) + 1);
    out.push_back(h[0]);
    for (int i = 1; i <= d / 2; ++i)
        out.push_back(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i - 1)]);
    return CountVector(std::move(out), VectorRole::G);
}

CountVector gamma_from_symmetric(const IntPolynomial& p, int axis_degree) {
    const int D = axis_degree;
    if (D < 0) throw dimension_error("gamma_from_symmetric: negative axis degree");
    if (p.degree() > D)
        throw dimension_error("gamma_from_symmetric: degree " + std::to_string(p.degree()) +
                              " exceeds axis degree " + std::to_string(D));
    for (int i = 0; 2 * i <= D; ++i) {
        if (p.coeff(static_cast<std::size_t>(i)) != p.coeff(static_cast<std::size_t>(D - i)))
            throw symmetry_error("gamma_from_symmetric: coefficients of t^" + std::to_string(i) +
                                     " and t^" + std::to_string(D - i) + " differ",
                                 i);
    }
    // Greedy extraction from degree 0 upward; exactness makes every
    // remainder integral and the final remainder zero.
    std::vector<Int> rem(static_cast<std::size_t>(D) + 1);
    for (int i = 0; i <= D; ++i) rem[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i));
    std::vector<Int> gamma(static_cast<std::size_t>(D / 2) + 1);
    for (int i = 0; i <= D / 2; ++i) {
        Int g = rem[static_cast<std::size_t>(i)];
        gamma[static_cast<std::size_t>(i)] = g;
        if (g == 0) continue;
        for (int m = 0; m <= D - 2 * i; ++m)
            rem[static_cast<std::size_t>(i + m)] -= g * binomial(D - 2 * i, m);
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("gamma_from_symmetric: nonzero remainder after extraction");
    return CountVector(std::move(gamma), VectorRole::Gamma);
}

IntPolynomial gamma_to_polynomial(const CountVector& gamma, int axis_degree) {
    const int D = axis_degree;
    if (D < 0) throw dimension_error("gamma_to_polynomial: negative axis degree");
    if (static_cast<int>(gamma.size()) > D / 2 + 1)
        throw dimension_error("gamma_to_polynomial: vector of length " + std::to_string(gamma.size()) +
                              " exceeds floor(D/2)+1 = " + std::to_string(D / 2 + 1));
    std::vector<Int> out(static_cast<std::size_t>(D) + 1);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        int rest = D - 2 * static_cast<int>(i);
        for (int m = 0; m <= rest; ++m)
            out[i + static_cast<std::size_t>(m)] += gamma[i] * binomial(rest, m);
    }
    return IntPolynomial(std::move(out));
}

}  // namespace sdgamma
