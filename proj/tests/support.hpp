#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <qdivisor/rational.hpp>
#include <qdivisor/report.hpp>
#include <qdivisor/series.hpp>

namespace qdivisor::testing {

// Small-height random rationals and sparse-ish series. Seeds are fixed so a
// failing case can be replayed from its index.
class SeriesGen
{
public:
    explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational()
    {
        return ratio(uniform(-9, 9), uniform(1, 6));
    }

    Rational nonzero_rational()
    {
        Rational r;
        do {
            r = rational();
        } while (r == 0);
        return r;
    }

    QSeries series(int order, Rational shift = 0)
    {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
        for (auto &x : c) {
            if (uniform(0, 3) != 0) {
                x = rational();
            }
        }
        return QSeries(std::move(c), shift);
    }

    QSeries series() { return series(uniform(0, 14)); }

    QSeries unit_series(int order)
    {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
        c[0] = nonzero_rational();
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (uniform(0, 2) != 0) {
                c[i] = rational();
            }
        }
        return QSeries(std::move(c));
    }

    // One of 0, 1/24, 1/8, 1/3, 1/2, 2/3, 7/8.
    Rational fractional_shift()
    {
        static const Rational shifts[] = {0, ratio(1, 24), ratio(1, 8), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(7, 8)};
        return shifts[uniform(0, 6)];
    }

private:
    std::mt19937_64 rng_;
};

// Schoolbook Cauchy product on plain vectors, truncated to the shorter input.
inline std::vector<Rational> naive_mul(std::span<const Rational> a, std::span<const Rational> b)
{
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// Power series 1 / p(q) for a polynomial p with p(0) = 1, by long division.
inline std::vector<Rational> naive_reciprocal(const std::vector<Rational> &p, std::size_t n)
{
    std::vector<Rational> r(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (std::size_t j = 1; j <= k && j < p.size(); ++j) {
            s -= p[j] * r[k - j];
        }
        r[k] = s;
    }
    return r;
}

inline long naive_sigma(long n)
{
    long s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

// Reports agree on everything except wall time.
inline bool same_outcome(const IdentityReport &a, const IdentityReport &b)
{
    return a.id == b.id && a.order_checked == b.order_checked && a.verdict == b.verdict
           && a.first_mismatch == b.first_mismatch && a.checked == b.checked && a.detail == b.detail;
}

} // namespace qdivisor::testing
