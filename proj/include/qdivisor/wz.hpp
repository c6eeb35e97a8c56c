#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <qdivisor/rational.hpp>
#include <qdivisor/report.hpp>

namespace qdivisor {

struct DenominatorVanishes : std::domain_error {
    DenominatorVanishes(long n_, long k_)
        : std::domain_error("certificate denominator vanishes at (n, k) = (" + std::to_string(n_) + ", "
                            + std::to_string(k_) + ") where the summand is nonzero"),
          n(n_), k(k_)
    {
    }
    long n;
    long k;
};

// A hypergeometric summand with finite support 0 <= k <= k_max(n), n >= n_min.
struct WZSummand {
    std::function<Rational(long n, long k)> f;
    std::function<long(long n)> k_max;
    long n_min = 0;
};

// f1(n, k) = (-1)^(n+k) (2n+1)/(n+k+1) binom(n+k+1, 2k+1) binom(k, t) / binom(n+t, 2t) 4^(k-t)
Rational wz1_f(int t, long n, long k);
// f1(n, k) times its certificate, written as one cancelled factorial
// expression so it stays finite at k = n + 1.
Rational wz1_g(int t, long n, long k);
WZSummand wz1_summand(int t);

// f1(n+1, k) - f1(n, k) == g1(n, k+1) - g1(n, k) for t <= n <= n_max,
// 0 <= k <= n + 1, and sum_k f1(n, k) == 1 for t <= n <= n_max. The parallel
// version spreads n across OpenMP threads.
IdentityReport wz1_check(int t, int n_max);
IdentityReport wz1_check_serial(int t, int n_max);

// (2n+1) sum_k (-1)^(n+k) binom(n+k+1, 2k+1)/(n+k+1) binom(k, 2) 3^(k-2)
Rational wz2_sum(long n);
// wz2_sum(n) == c_n_closed(n) for 0 <= n <= n_max.
IdentityReport wz2_direct_check(int n_max);

// f2(n, k) = (-1)^(k-1) (6n+1) / (n (3n+1) (3n+k+1)) binom(3n+k+1, 2k+1) binom(k, 2) 3^(k-2), n >= 1
Rational wz2_f(long n, long k);
WZSummand wz2_summand();
// sum_k f2(n, k) == 1/2 for 1 <= n <= n_max.
IdentityReport wz2_normalized_sum_check(int n_max);

// Integer polynomial in (n, k), keyed by the exponent pair.
struct BivariatePoly {
    std::map<std::pair<int, int>, Integer> terms;

    Integer evaluate(long n, long k) const;
    friend bool operator==(const BivariatePoly &, const BivariatePoly &) = default;
};

// R(n, k) = numerator / denominator
struct RationalCertificate {
    BivariatePoly numerator;
    BivariatePoly denominator;
    friend bool operator==(const RationalCertificate &, const RationalCertificate &) = default;
};

// Checks f(n+1, k) - f(n, k) == g(n, k+1) - g(n, k) with g = f R on
// n_min <= n <= n_max and 0 <= k <= max(k_max(n), k_max(n+1)) + 1. Where the
// denominator of R vanishes and f = 0 the value of g is not determined by
// this form; relations that need it are skipped and counted in detail.
// A vanishing denominator with f != 0 throws DenominatorVanishes.
IdentityReport certificate_check(const WZSummand &summand, const RationalCertificate &cert, int n_max);

} // namespace qdivisor
