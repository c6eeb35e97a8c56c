#include <qdivisor/etatheta.hpp>

#include <stdexcept>

namespace qdivisor {

namespace {

void require_spec(PochhammerSpec spec)
{
    if (spec.a_exp < 1 || spec.b_exp < 1) {
        throw std::invalid_argument("PochhammerSpec: exponents must be positive");
    }
}

// In place multiplication by (1 + sign * q^e).
void times_binomial(std::vector<Rational> &c, int e, int sign)
{
    for (int n = static_cast<int>(c.size()) - 1; n >= e; --n) {
        if (c[n - e] != 0) {
            if (sign > 0) {
                c[n] += c[n - e];
            } else {
                c[n] -= c[n - e];
            }
        }
    }
}

QSeries pochhammer_impl(PochhammerSpec spec, int order, int sign)
{
    require_spec(spec);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long e = spec.a_exp; e <= order; e += spec.b_exp) {
        times_binomial(c, static_cast<int>(e), sign);
    }
    return QSeries(std::move(c));
}

} // namespace

QSeries pochhammer_inf(PochhammerSpec spec, int order) { return pochhammer_impl(spec, order, -1); }

QSeries pochhammer_inf_plus(PochhammerSpec spec, int order) { return pochhammer_impl(spec, order, +1); }

long pentagonal(long n) { return n * (3 * n + 1) / 2; }

QSeries pentagonal_sum(int order, const std::function<Rational(long)> &weight, int scale)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    // n >= 0 gives exponents 0, 2, 7, ...; n < 0 gives 1, 5, 12, ...
    for (long n = 0; scale * pentagonal(n) <= order; ++n) {
        c[scale * pentagonal(n)] += weight(n);
    }
    for (long n = -1; scale * pentagonal(n) <= order; --n) {
        c[scale * pentagonal(n)] += weight(n);
    }
    return QSeries(std::move(c));
}

QSeries euler_pentagonal(int order)
{
    return pentagonal_sum(order, [](long n) { return Rational(n % 2 == 0 ? 1 : -1); });
}

QSeries theta3(int k, int order, bool alternating)
{
    if (k < 1) {
        throw std::invalid_argument("theta3: k must be positive");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    // n and -n contribute the same exponent.
    for (long n = 1; k * n * n <= order; ++n) {
        c[k * n * n] = (alternating && n % 2 == 1) ? -2 : 2;
    }
    return QSeries(std::move(c));
}

QSeries theta2(int k, int order)
{
    if (k < 1) {
        throw std::invalid_argument("theta2: k must be positive");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    // n and -n-1 contribute the same exponent (n + 1/2)^2.
    for (long n = 0; k * (n * n + n) <= order; ++n) {
        c[k * (n * n + n)] = 2;
    }
    return QSeries(std::move(c), ratio(k, 4));
}

QSeries lambert_S(int j, int order)
{
    if (j < 0) {
        throw std::invalid_argument("lambert_S: j must be non-negative");
    }
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    Integer dj;
    for (long d = 1; d <= order; ++d) {
        mpz_ui_pow_ui(dj.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
        for (long m = d; m <= order; m += d) {
            acc[m] += dj;
        }
    }
    std::vector<Rational> c(acc.size());
    for (std::size_t n = 0; n < acc.size(); ++n) {
        c[n] = Rational(acc[n]);
    }
    return QSeries(std::move(c));
}

long sigma(long n)
{
    if (n < 1) {
        throw std::invalid_argument("sigma: n must be positive");
    }
    long total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            total += d;
            if (d * d != n) {
                total += n / d;
            }
        }
    }
    return total;
}

Integer sigma_power(int j, long n)
{
    if (n < 1) {
        throw std::invalid_argument("sigma_power: n must be positive");
    }
    Integer total = 0, term;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
            total += term;
        }
    }
    return total;
}

IdentityReport jtp_z1_check(int order)
{
    IdentityReport report;
    {
        ReportTimer timer(report);
        const QSeries lhs = mul(pochhammer_inf_plus({1, 1}, order), pochhammer_inf({2, 2}, order));
        std::vector<Rational> tri(static_cast<std::size_t>(order) + 1);
        for (long n = 0; n * (n + 1) / 2 <= order; ++n) {
            tri[n * (n + 1) / 2] = 1;
        }
        report = compare_series("jtp-z1", lhs, QSeries(std::move(tri)));
    }
    return report;
}

} // namespace qdivisor
