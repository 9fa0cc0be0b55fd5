#pragma once

#include "sdgamma/poly.hpp"

namespace sdgamma {

// h(t) = (1-t)^d f(t/(1-t)), expanded exactly. f must have length d+1 with
// f[0] = 1; the result has length d+1.
CountVector h_from_f(const CountVector& f, int d);

// Inverse transform, f(t) = (1+t)^d h(t/(1+t)). h must have length d+1.
CountVector f_from_h(const CountVector& h, int d);

// g_0 = h_0 and g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2), d = len(h)-1.
CountVector g_from_h(const CountVector& h);

// Expands a polynomial with symmetric coefficients (p_i = p_{D-i}, symmetry
// axis at degree floor(D/2)) in the basis { t^i (1+t)^(D-2i) } and returns
// the coefficients (gamma_0, ..., gamma_{floor(D/2)}). The axis degree D is
// explicit because the same polynomial can sit under different axes.
// Throws symmetry_error naming the first offending index on asymmetric input.
CountVector gamma_from_symmetric(const IntPolynomial& p, int axis_degree);

// Sum of gamma_i t^i (1+t)^(D-2i); exact inverse of gamma_from_symmetric.
IntPolynomial gamma_to_polynomial(const CountVector& gamma, int axis_degree);

}  // namespace sdgamma
