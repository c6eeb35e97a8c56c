#pragma once

#include <functional>

#include <qdivisor/report.hpp>
#include <qdivisor/series.hpp>

namespace qdivisor {

// (q^a; q^b)_inf
struct PochhammerSpec {
    int a_exp = 1;
    int b_exp = 1;
};

// prod_{k>=0} (1 - q^(a + k b)), only factors with a + k b <= order.
QSeries pochhammer_inf(PochhammerSpec spec, int order);
// prod_{k>=0} (1 + q^(a + k b)), i.e. (-q^a; q^b)_inf.
QSeries pochhammer_inf_plus(PochhammerSpec spec, int order);

// Pentagonal number n(3n+1)/2, defined for all integers n.
long pentagonal(long n);

// sum over n in Z of weight(n) q^(scale * pentagonal(n)), folded to the two
// one-sided ranges n >= 0 and n < 0.
QSeries pentagonal_sum(int order, const std::function<Rational(long)> &weight, int scale = 1);

// sum_{n in Z} (-1)^n q^(n(3n+1)/2)
QSeries euler_pentagonal(int order);

// theta_3(q^k) = sum_{n in Z} q^(k n^2); with alternating = true this is
// theta_3(-q^k) = sum (-1)^n q^(k n^2).
QSeries theta3(int k, int order, bool alternating = false);

// theta_2(q^k) = q^(k/4) * sum_{n>=0} 2 q^(k(n^2+n)). The integer part carries
// `order` + 1 coefficients.
QSeries theta2(int k, int order);

// S_j(q) = sum_{k>=1} k^j q^k / (1 - q^k); the q^n coefficient is sigma_j(n).
QSeries lambert_S(int j, int order);

long sigma(long n);
Integer sigma_power(int j, long n);

// Jacobi triple product at z = 1:
// prod (1 + q^m)(1 - q^(2m)) == sum_{n>=0} q^(n(n+1)/2).
IdentityReport jtp_z1_check(int order);

} // namespace qdivisor
