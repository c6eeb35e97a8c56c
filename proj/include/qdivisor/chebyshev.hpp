#pragma once

#include <vector>

#include <qdivisor/poly.hpp>
#include <qdivisor/rational.hpp>

namespace qdivisor {

// [x^t] to_n((x + a + 2) / 4)
struct ChebCoeffQuery {
    int n = 0;
    int t = 0;
    int a = 0;
};

// to_n(x) = T_{2n+1}(sqrt x) / sqrt x via the alternating binomial sum.
Poly to_n_poly(int n);

// T_k(y) by the three-term recurrence T_{k+1} = 2y T_k - T_{k-1}.
Poly chebyshev_t(int k);

// Finite hypergeometric sum for [x^t] to_n((x + a + 2) / 4). Every division
// happens in exact rationals; (a + 2)^0 is 1 when a = -2.
Rational cheb_coeff_sum(const ChebCoeffQuery &query);

// (-1)^(n-t) [z^n] z^t (1 + z) / (1 + a z + z^2)^(t+1), expanded as a
// truncated power series.
Rational riordan_coeff(const ChebCoeffQuery &query);

// riordan_coeff for n = 0..n_max at fixed (t, a), sharing one expansion.
std::vector<Rational> riordan_column(int t, int a, int n_max);

// Closed forms read off the rational generating function for a = 2, -2, 0.
// Throws std::invalid_argument for other a.
Rational riordan_closed_form(const ChebCoeffQuery &query);

// Piecewise closed form of the t = 2, a = 1 coefficient.
Rational c_n_closed(int n);

// Coefficients of 1 / (1 + z + z^2)^3 by the piecewise formula.
Rational a128504_term(int n);

// sum_k (-1)^k (2n+1) binom(2n+1-k, k) / (2n+1-k) binom(n-k, t) 3^(n-k-t)
Rational f_t_eval(int t, int n);

} // namespace qdivisor
