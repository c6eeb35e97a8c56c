#include <qdivisor/chebyshev.hpp>

#include <stdexcept>

#include <qdivisor/series.hpp>

namespace qdivisor {

namespace {

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

void require_n(int n)
{
    if (n < 0) {
        throw std::invalid_argument("chebyshev: index must be non-negative");
    }
}

} // namespace

Poly to_n_poly(int n)
{
    require_n(n);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Integer four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
        c[k] = sign(n + k) * (2 * n + 1) * ratio(binomial(n + k + 1, 2 * k + 1) * four_k, n + k + 1);
    }
    return Poly(std::move(c));
}

Poly chebyshev_t(int k)
{
    require_n(k);
    Poly prev{1};
    if (k == 0) {
        return prev;
    }
    Poly cur{0, 1};
    const Poly two_y{0, 2};
    for (int j = 1; j < k; ++j) {
        Poly next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational cheb_coeff_sum(const ChebCoeffQuery &query)
{
    const auto [n, t, a] = query;
    require_n(n);
    if (t < 0) {
        return 0;
    }
    const Rational base = a + 2;
    Rational total = 0;
    for (int k = t; k <= n; ++k) {
        // binom(k, t) = 0 for k < t, so those summands are skipped outright.
        Rational term = ratio(binomial(n + k + 1, 2 * k + 1), n + k + 1);
        term *= binomial(k, t);
        term *= power(base, k - t);
        total += sign(n + k) * term;
    }
    return total * (2 * n + 1);
}

std::vector<Rational> riordan_column(int t, int a, int n_max)
{
    require_n(n_max);
    if (t < 0) {
        throw std::invalid_argument("riordan_column: t must be non-negative");
    }
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
    if (t > n_max) {
        return out;
    }
    // z-series of (1 + z) / (1 + a z + z^2)^(t+1), needed up to z^(n_max - t).
    const int order = n_max - t;
    std::vector<Rational> den(static_cast<std::size_t>(order) + 1);
    den[0] = 1;
    if (order >= 1) {
        den[1] = a;
    }
    if (order >= 2) {
        den[2] = 1;
    }
    std::vector<Rational> num(static_cast<std::size_t>(order) + 1);
    num[0] = 1;
    if (order >= 1) {
        num[1] = 1;
    }
    const QSeries h = mul(QSeries(std::move(num)), pow(invert(QSeries(std::move(den))), static_cast<unsigned>(t + 1)));
    for (int n = t; n <= n_max; ++n) {
        out[n] = sign(n - t) * h[n - t];
    }
    return out;
}

Rational riordan_coeff(const ChebCoeffQuery &query)
{
    require_n(query.n);
    if (query.t < 0 || query.t > query.n) {
        return 0;
    }
    return riordan_column(query.t, query.a, query.n)[query.n];
}

Rational riordan_closed_form(const ChebCoeffQuery &query)
{
    const auto [n, t, a] = query;
    switch (a) {
    case 2:
        return Rational(binomial(n + t, 2 * t));
    case -2:
        return sign(n - t) * Rational(binomial(n + t + 1, 2 * t + 1) + binomial(n + t, 2 * t + 1));
    case 0: {
        // Both parities of n + t reduce to j = floor((n + t) / 2).
        const int j = (n + t) / 2;
        return sign(n + j) * Rational(binomial(j, t));
    }
    default:
        throw std::invalid_argument("riordan_closed_form: only a in {2, -2, 0} has a closed form");
    }
}

Rational c_n_closed(int n)
{
    require_n(n);
    const long j = n % 3 == 2 ? (n + 1) / 3 : n / 3;
    switch (n % 3) {
    case 0:
        return sign(j - 1) * ratio(j * (3 * j + 1), 2);
    case 1:
        return 0;
    default:
        return sign(j - 1) * ratio(j * (3 * j - 1), 2);
    }
}

Rational a128504_term(int n)
{
    require_n(n);
    switch (n % 3) {
    case 0: {
        const long j = n / 3;
        return j + 1;
    }
    case 1: {
        const long j = n / 3;
        return ratio(-3 * (j + 1) * (j + 2), 2);
    }
    default: {
        const long j = (n + 1) / 3;
        return ratio(3 * j * (j + 1), 2);
    }
    }
}

Rational f_t_eval(int t, int n)
{
    require_n(n);
    if (t < 0) {
        return 0;
    }
    Rational total = 0;
    for (int k = 0; n - k >= t; ++k) {
        Rational term = ratio(binomial(2 * n + 1 - k, k), 2 * n + 1 - k);
        term *= binomial(n - k, t);
        term *= power(Rational(3), n - k - t);
        total += sign(k) * term;
    }
    return total * (2 * n + 1);
}

} // namespace qdivisor
