#include <qdivisor/wz.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include <qdivisor/chebyshev.hpp>

namespace qdivisor {

namespace {

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

Rational pow_int(long base, long e)
{
    return power(Rational(base), e);
}

void require_t(int t)
{
    if (t < 0) {
        throw std::invalid_argument("wz: t must be non-negative");
    }
}

struct RowResult {
    std::size_t checked = 0;
    std::optional<Mismatch> mismatch;
    std::string detail;
};

// Pair relation and unit sum for one n.
RowResult wz1_row(int t, long n)
{
    RowResult row;
    Rational sum = 0;
    for (long k = 0; k <= n + 1; ++k) {
        const Rational lhs = wz1_f(t, n + 1, k) - wz1_f(t, n, k);
        const Rational rhs = wz1_g(t, n, k + 1) - wz1_g(t, n, k);
        ++row.checked;
        if (lhs != rhs && !row.mismatch) {
            row.mismatch = Mismatch{static_cast<int>(n), lhs, rhs};
            row.detail = "pair relation at k=" + std::to_string(k);
        }
        sum += wz1_f(t, n, k);
    }
    ++row.checked;
    if (sum != 1 && !row.mismatch) {
        row.mismatch = Mismatch{static_cast<int>(n), sum, 1};
        row.detail = "sum_k f1 != 1";
    }
    return row;
}

IdentityReport reduce_rows(std::string id, int order, const std::vector<RowResult> &rows,
                           const std::string &pass_detail)
{
    IdentityReport report;
    report.id = std::move(id);
    report.order_checked = order;
    for (const auto &row : rows) {
        report.checked += row.checked;
        if (row.mismatch && report.passed()) {
            report.record_mismatch(*row.mismatch);
            report.detail = row.detail;
        }
    }
    if (report.passed()) {
        report.detail = pass_detail;
    }
    return report;
}

} // namespace

Rational wz1_f(int t, long n, long k)
{
    require_t(t);
    if (n < t) {
        throw std::domain_error("wz1_f: binom(n+t, 2t) vanishes for n < t");
    }
    if (k < t || k > n) {
        return 0;
    }
    Rational v = ratio(Integer(2 * n + 1) * binomial(n + k + 1, 2 * k + 1) * binomial(k, t),
                       Integer(n + k + 1) * binomial(n + t, 2 * t));
    return sign(n + k) * v * pow_int(4, k - t);
}

Rational wz1_g(int t, long n, long k)
{
    require_t(t);
    if (n < t) {
        throw std::domain_error("wz1_g: binom(n+t, 2t) vanishes for n < t");
    }
    if (k < t || k > n + 1) {
        return 0;
    }
    const Integer num = 2 * Integer(n + 1) * (k - t) * factorial(n + k) * binomial(k, t);
    const Integer den = factorial(2 * k) * factorial(n - k + 1) * binomial(n + t, 2 * t) * (n + t + 1);
    return sign(n + k) * ratio(num, den) * pow_int(4, k - t);
}

WZSummand wz1_summand(int t)
{
    require_t(t);
    return {[t](long n, long k) { return wz1_f(t, n, k); }, [](long n) { return n; }, t};
}

IdentityReport wz1_check_serial(int t, int n_max)
{
    require_t(t);
    IdentityReport report;
    {
        ReportTimer timer(report);
        std::vector<RowResult> rows;
        for (long n = t; n <= n_max; ++n) {
            rows.push_back(wz1_row(t, n));
        }
        report = reduce_rows("wz1", n_max, rows, "t=" + std::to_string(t));
    }
    return report;
}

IdentityReport wz1_check(int t, int n_max)
{
    require_t(t);
    IdentityReport report;
    {
        ReportTimer timer(report);
        const long count = std::max<long>(0, n_max - t + 1);
        std::vector<RowResult> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            rows[i] = wz1_row(t, t + i);
        }
        report = reduce_rows("wz1", n_max, rows, "t=" + std::to_string(t));
    }
    return report;
}

Rational wz2_sum(long n)
{
    if (n < 0) {
        throw std::invalid_argument("wz2_sum: n must be non-negative");
    }
    Rational total = 0;
    for (long k = 2; k <= n; ++k) {
        Rational term = ratio(binomial(n + k + 1, 2 * k + 1) * binomial(k, 2), n + k + 1);
        total += sign(n + k) * term * pow_int(3, k - 2);
    }
    return total * (2 * n + 1);
}

IdentityReport wz2_direct_check(int n_max)
{
    IdentityReport report;
    report.id = "wz2";
    report.order_checked = n_max;
    {
        ReportTimer timer(report);
        for (long n = 0; n <= n_max; ++n) {
            const Rational lhs = wz2_sum(n);
            const Rational rhs = c_n_closed(static_cast<int>(n));
            ++report.checked;
            if (lhs != rhs) {
                report.record_mismatch({static_cast<int>(n), lhs, rhs});
            }
        }
    }
    return report;
}

Rational wz2_f(long n, long k)
{
    if (n < 1) {
        throw std::domain_error("wz2_f: the 1/(n(3n+1)) prefactor needs n >= 1");
    }
    if (k < 2 || k > 3 * n) {
        return 0;
    }
    Rational v = ratio(Integer(6 * n + 1) * binomial(3 * n + k + 1, 2 * k + 1) * binomial(k, 2),
                       Integer(n) * (3 * n + 1) * (3 * n + k + 1));
    return -sign(k) * v * pow_int(3, k - 2);
}

WZSummand wz2_summand()
{
    return {[](long n, long k) { return wz2_f(n, k); }, [](long n) { return 3 * n; }, 1};
}

IdentityReport wz2_normalized_sum_check(int n_max)
{
    IdentityReport report;
    report.id = "wz2-f2-sum";
    report.order_checked = n_max;
    {
        ReportTimer timer(report);
        const Rational half = ratio(1, 2);
        for (long n = 1; n <= n_max; ++n) {
            Rational sum = 0;
            for (long k = 0; k <= 3 * n; ++k) {
                sum += wz2_f(n, k);
            }
            ++report.checked;
            if (sum != half) {
                report.record_mismatch({static_cast<int>(n), sum, half});
            }
        }
    }
    return report;
}

Integer BivariatePoly::evaluate(long n, long k) const
{
    Integer total = 0;
    for (const auto &[e, c] : terms) {
        Integer pn, pk;
        mpz_pow_ui(pn.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(e.first));
        mpz_pow_ui(pk.get_mpz_t(), Integer(k).get_mpz_t(), static_cast<unsigned long>(e.second));
        total += c * pn * pk;
    }
    return total;
}

IdentityReport certificate_check(const WZSummand &summand, const RationalCertificate &cert, int n_max)
{
    for (const auto &poly : {cert.numerator, cert.denominator}) {
        for (const auto &[e, c] : poly.terms) {
            if (e.first < 0 || e.second < 0) {
                throw std::invalid_argument("certificate: negative exponent");
            }
        }
    }
    IdentityReport report;
    report.id = "wz-certificate";
    report.order_checked = n_max;
    std::size_t skipped = 0;
    {
        ReportTimer timer(report);
        const auto g = [&](long n, long k) -> std::optional<Rational> {
            const Rational f = summand.f(n, k);
            const Integer den = cert.denominator.evaluate(n, k);
            if (den == 0) {
                if (f != 0) {
                    throw DenominatorVanishes(n, k);
                }
                return std::nullopt;
            }
            if (f == 0) {
                return Rational(0);
            }
            return f * ratio(cert.numerator.evaluate(n, k), den);
        };
        for (long n = summand.n_min; n < n_max; ++n) {
            const long k_hi = std::max(summand.k_max(n), summand.k_max(n + 1)) + 1;
            for (long k = 0; k <= k_hi; ++k) {
                const auto g_hi = g(n, k + 1);
                const auto g_lo = g(n, k);
                if (!g_hi || !g_lo) {
                    ++skipped;
                    continue;
                }
                const Rational lhs = summand.f(n + 1, k) - summand.f(n, k);
                const Rational rhs = *g_hi - *g_lo;
                ++report.checked;
                if (lhs != rhs && report.passed()) {
                    report.record_mismatch({static_cast<int>(n), lhs, rhs});
                    report.detail = "pair relation at k=" + std::to_string(k);
                }
            }
        }
    }
    if (report.passed()) {
        report.detail = std::to_string(skipped) + " cells skipped at removable poles";
    }
    return report;
}

} // namespace qdivisor
