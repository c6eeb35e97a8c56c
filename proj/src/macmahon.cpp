#include <qdivisor/macmahon.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include <qdivisor/chebyshev.hpp>
#include <qdivisor/etatheta.hpp>

namespace qdivisor {

namespace {

using Int = std::int64_t;

Int checked_add(Int x, Int y)
{
    Int r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("u_direct: 64-bit coefficient overflow");
    }
    return r;
}

Int checked_sub(Int x, Int y)
{
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw std::overflow_error("u_direct: 64-bit coefficient overflow");
    }
    return r;
}

Int checked_mul(Int x, Int y)
{
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw std::overflow_error("u_direct: 64-bit coefficient overflow");
    }
    return r;
}

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
}

// Tuple descent for one (a, t, order). Scratch buffers are per depth; `in`
// is only read at indices >= lo, where it is valid.
class DirectDescent
{
public:
    DirectDescent(int a, int t, int order)
        : a_(a), order_(order), scratch_(static_cast<std::size_t>(t) + 1, std::vector<Int>(order + 1)),
          acc_(static_cast<std::size_t>(order) + 1)
    {
    }

    // out = in * Q_m on [lo + m, order].
    void apply(const std::vector<Int> &in, std::vector<Int> &out, int lo, int m) const
    {
        const int start = lo + m;
        for (int k = start; k <= order_; ++k) {
            Int v = in[k - m];
            if (k - m >= start) {
                v = checked_sub(v, checked_mul(a_, out[k - m]));
            }
            if (k - 2 * m >= start) {
                v = checked_sub(v, out[k - 2 * m]);
            }
            out[k] = v;
        }
    }

    // Chooses the next `remaining` indices, all >= min_index.
    void descend(int remaining, int min_index, int sum, const std::vector<Int> &partial, int depth)
    {
        auto &out = scratch_[static_cast<std::size_t>(depth)];
        for (int m = min_index; sum + remaining * m + remaining * (remaining - 1) / 2 <= order_; ++m) {
            apply(partial, out, sum, m);
            visit(remaining, m, sum, out, depth);
        }
    }

    // Handles the subtree below a chosen index m whose product is in `out`.
    void visit(int remaining, int m, int sum, const std::vector<Int> &out, int depth)
    {
        if (remaining == 1) {
            for (int k = sum + m; k <= order_; ++k) {
                acc_[k] = checked_add(acc_[k], out[k]);
            }
        } else {
            descend(remaining - 1, m + 1, sum + m, out, depth + 1);
        }
    }

    std::vector<Int> &scratch(int depth) { return scratch_[static_cast<std::size_t>(depth)]; }
    const std::vector<Int> &acc() const { return acc_; }

private:
    Int a_;
    int order_;
    std::vector<std::vector<Int>> scratch_;
    std::vector<Int> acc_;
};

QSeries to_series(const std::vector<Int> &c)
{
    std::vector<Rational> out(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        out[n] = Rational(static_cast<long>(c[n]));
    }
    return QSeries(std::move(out));
}

void require_direct(const MacParams &p)
{
    require_supported_a(p.a);
    require_order(p.order);
    if (p.t < 0) {
        throw std::invalid_argument("u_direct: t must be non-negative");
    }
}

// c <- c / (1 + a q^m + q^(2m)), in place.
void divide_trinomial(std::vector<Rational> &c, int a, int m)
{
    for (std::size_t k = static_cast<std::size_t>(m); k < c.size(); ++k) {
        if (a != 0 && c[k - m] != 0) {
            c[k] -= a * c[k - m];
        }
        if (k >= 2 * static_cast<std::size_t>(m) && c[k - 2 * m] != 0) {
            c[k] -= c[k - 2 * m];
        }
    }
}

QSeries triangular_sum(int order, const std::function<Rational(int)> &coeff)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n * (n + 1) / 2 <= order; ++n) {
        c[n * (n + 1) / 2] += coeff(n);
    }
    return QSeries(std::move(c));
}

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

bool supported_a(int a) { return a >= -2 && a <= 2; }

void require_supported_a(int a)
{
    if (!supported_a(a)) {
        throw UnsupportedA("a must be one of -2, -1, 0, 1, 2 (got " + std::to_string(a) + ")");
    }
}

const char *to_string(Route route)
{
    switch (route) {
    case Route::direct:
        return "direct";
    case Route::product:
        return "product";
    case Route::cheb:
        return "cheb";
    }
    return "?";
}

QSeries q_m_factor(int a, int m, int order)
{
    require_supported_a(a);
    require_order(order);
    if (m < 1) {
        throw std::invalid_argument("q_m_factor: m must be positive");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    if (m <= order) {
        c[m] = 1;
        divide_trinomial(c, a, m);
    }
    return QSeries(std::move(c));
}

QSeries u_direct_serial(const MacParams &p)
{
    require_direct(p);
    if (p.t == 0) {
        return QSeries::constant(1, p.order);
    }
    DirectDescent walk(p.a, p.t, p.order);
    std::vector<Int> one(static_cast<std::size_t>(p.order) + 1);
    one[0] = 1;
    walk.descend(p.t, 1, 0, one, 0);
    return to_series(walk.acc());
}

QSeries u_direct(const MacParams &p)
{
    require_direct(p);
    if (p.t == 0) {
        return QSeries::constant(1, p.order);
    }
    const int t = p.t;
    const int order = p.order;
    // Largest admissible first index: m + (m+1) + ... + (m+t-1) <= order.
    int m_max = 0;
    while ((m_max + 1) * t + t * (t - 1) / 2 <= order) {
        ++m_max;
    }
    std::vector<Int> total(static_cast<std::size_t>(order) + 1);
    std::vector<Int> one(static_cast<std::size_t>(order) + 1);
    one[0] = 1;
    bool overflow = false;

#pragma omp parallel
    {
        DirectDescent walk(p.a, t, order);
#pragma omp for schedule(dynamic, 1)
        for (int m = 1; m <= m_max; ++m) {
            try {
                auto &out = walk.scratch(0);
                walk.apply(one, out, 0, m);
                walk.visit(t, m, 0, out, 0);
            } catch (const std::overflow_error &) {
#pragma omp atomic write
                overflow = true;
            }
        }
#pragma omp critical(qdivisor_u_direct_reduce)
        {
            for (int k = 0; k <= order && !overflow; ++k) {
                Int r;
                if (__builtin_add_overflow(total[k], walk.acc()[k], &r)) {
                    overflow = true;
                } else {
                    total[k] = r;
                }
            }
        }
    }
    if (overflow) {
        throw std::overflow_error("u_direct: 64-bit coefficient overflow");
    }
    return to_series(total);
}

XPoly u_product(int a, int t_max, int order)
{
    require_supported_a(a);
    require_order(order);
    if (t_max < 0) {
        throw std::invalid_argument("u_product: t_max must be non-negative");
    }
    std::vector<std::vector<Rational>> u(static_cast<std::size_t>(t_max) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    u[0][0] = 1;
    std::vector<Rational> term(static_cast<std::size_t>(order) + 1);
    for (int m = 1; m <= order; ++m) {
        // Descending t so U_{t-1} is still the value before this factor.
        for (int t = t_max; t >= 1; --t) {
            // U_{t-1} starts at q^(t(t-1)/2); Q_m adds at least m.
            if (t * (t - 1) / 2 + m > order) {
                continue;
            }
            std::fill(term.begin(), term.end(), Rational(0));
            for (int k = m; k <= order; ++k) {
                term[k] = u[t - 1][k - m];
            }
            divide_trinomial(term, a, m);
            for (int k = m; k <= order; ++k) {
                if (term[k] != 0) {
                    u[t][k] += term[k];
                }
            }
        }
    }
    std::vector<QSeries> coeffs;
    coeffs.reserve(u.size());
    for (auto &c : u) {
        coeffs.emplace_back(std::move(c));
    }
    return XPoly(std::move(coeffs));
}

QSeries mac_prefactor(int a, int order)
{
    require_supported_a(a);
    const auto poch = [order](int e) { return pochhammer_inf({e, e}, order); };
    switch (a) {
    case -2:
        return invert(pow(poch(1), 3));
    case 2:
        return mul(poch(1), invert(pow(poch(2), 2)));
    case 1:
        return invert(poch(3));
    case -1:
        return mul(mul(poch(2), poch(3)), invert(mul(pow(poch(1), 2), poch(6))));
    default:
        return mul(poch(2), invert(mul(poch(1), poch(4))));
    }
}

QSeries raw_prefactor(int a, int order)
{
    require_supported_a(a);
    require_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        // times (1 + a q^n + q^(2n))(1 - q^n) = 1 + (a-1) q^n + (1-a) q^(2n) - q^(3n)
        for (int k = order; k >= n; --k) {
            Rational v = c[k];
            v += (a - 1) * c[k - n];
            if (k >= 2 * n) {
                v += (1 - a) * c[k - 2 * n];
            }
            if (k >= 3 * n) {
                v -= c[k - 3 * n];
            }
            c[k] = std::move(v);
        }
    }
    return invert(QSeries(std::move(c)));
}

Rational u_cheb_inner_coeff(int n, int t, int a)
{
    require_supported_a(a);
    switch (a) {
    case -2:
        return sign(n + t) * ratio(Integer(2 * n + 1) * binomial(n + t, 2 * t), 2 * t + 1);
    case 2:
        return Rational(binomial(n + t, 2 * t));
    case 0: {
        const int j = (n + t) / 2;
        return sign(n + j) * Rational(binomial(j, t));
    }
    default:
        return cheb_coeff_sum({n, t, a});
    }
}

QSeries u_cheb(const MacParams &p)
{
    require_supported_a(p.a);
    require_order(p.order);
    if (p.t < 0) {
        throw std::invalid_argument("u_cheb: t must be non-negative");
    }
    const QSeries inner = triangular_sum(p.order, [&](int n) { return u_cheb_inner_coeff(n, p.t, p.a); });
    return mul(mac_prefactor(p.a, p.order), inner);
}

RouteResult compute_route(Route route, const MacParams &p)
{
    switch (route) {
    case Route::direct:
        return {route, u_direct(p)};
    case Route::product:
        return {route, u_product(p.a, p.t, p.order)[p.t]};
    case Route::cheb:
        return {route, u_cheb(p)};
    }
    throw std::logic_error("compute_route: unknown route");
}

Rational mo_coeff(int a, int t, int n)
{
    if (n < 0) {
        throw OutOfRange("mo_coeff: n must be non-negative");
    }
    const MacParams p{a, t, n};
    const Rational direct = u_direct(p)[n];
    const Rational product = u_product(a, t, n)[t][n];
    const Rational cheb = u_cheb(p)[n];
    if (direct != product || direct != cheb) {
        throw RouteDisagreement("MO(" + std::to_string(a) + "," + std::to_string(t) + ";" + std::to_string(n)
                                + "): direct " + to_string(direct) + ", product " + to_string(product)
                                + ", cheb " + to_string(cheb));
    }
    return direct;
}

IdentityReport scan_congruence_2mod3(int t_max, int order)
{
    IdentityReport report;
    report.id = "thm-2.3";
    report.order_checked = order;
    {
        ReportTimer timer(report);
        if (t_max >= 1) {
            const XPoly f = u_product(1, t_max, order);
            for (int t = 1; t <= t_max; ++t) {
                for (int n = 2; n <= order; n += 3) {
                    ++report.checked;
                    if (f[t][n] != 0) {
                        const bool first = !report.first_mismatch || n < report.first_mismatch->exponent;
                        report.record_mismatch({n, f[t][n], 0});
                        if (first) {
                            report.detail = "MO(1," + std::to_string(t) + ";" + std::to_string(n) + ") != 0";
                        }
                    }
                }
            }
        }
        if (report.passed()) {
            report.detail = std::to_string(report.checked) + " coefficients MO(1,t;3n+2), 1<=t<="
                            + std::to_string(t_max) + ", all zero";
        }
    }
    return report;
}

IdentityReport scan_congruence_1mod3_mod3(int order)
{
    IdentityReport report;
    report.id = "thm-3.2";
    report.order_checked = order;
    {
        ReportTimer timer(report);
        const XPoly f = u_product(1, 3, order);
        const QSeries &u3 = f[3];
        int first_nonzero = -1;
        for (int n = 1; n <= order; n += 3) {
            ++report.checked;
            const Rational &v = u3[n];
            if (v != 0 && first_nonzero < 0) {
                first_nonzero = n;
            }
            if (!is_integer(v)) {
                report.record_mismatch({n, v, 0});
                continue;
            }
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num_mpz_t(), 3);
            if (r != 0) {
                report.record_mismatch({n, Rational(r), 0});
            }
        }
        std::ostringstream os;
        os << report.checked << " coefficients MO(1,3;3n+1) checked mod 3";
        if (first_nonzero >= 0) {
            os << "; first nonzero MO(1,3;" << first_nonzero << ") = " << to_string(u3[first_nonzero]);
        }
        report.detail = os.str();
    }
    return report;
}

QSeries h_r_series(int a, int r, int order)
{
    require_supported_a(a);
    require_order(order);
    if (r < 1) {
        throw std::invalid_argument("h_r_series: r must be positive");
    }
    std::vector<Rational> total(static_cast<std::size_t>(order) + 1);
    std::vector<Rational> term(static_cast<std::size_t>(order) + 1);
    for (int m = 1; static_cast<long>(r) * m <= order; ++m) {
        std::fill(term.begin(), term.end(), Rational(0));
        term[static_cast<std::size_t>(r) * m] = 1;
        for (int i = 0; i < r; ++i) {
            divide_trinomial(term, a, m);
        }
        for (int k = r * m; k <= order; ++k) {
            total[k] += term[k];
        }
    }
    return QSeries(std::move(total));
}

IdentityReport newton_log_check(int a, int r_max, int order)
{
    IdentityReport report;
    report.id = "newton-log";
    report.order_checked = order;
    {
        ReportTimer timer(report);
        const XPoly f = u_product(a, r_max, order);
        const XPoly lhs = scale(formal_log(reflect(f)), Rational(-1));
        for (int r = 0; r <= r_max; ++r) {
            const QSeries rhs = r == 0 ? QSeries(order) : scale(h_r_series(a, r, order), Rational(1, r));
            report.checked += static_cast<std::size_t>(order) + 1;
            if (auto m = first_mismatch(lhs[r], rhs)) {
                report.record_mismatch(*m);
                report.detail = "x^" + std::to_string(r);
            }
        }
    }
    return report;
}

} // namespace qdivisor
