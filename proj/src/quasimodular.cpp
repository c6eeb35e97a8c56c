#include <qdivisor/quasimodular.hpp>

#include <algorithm>
#include <charconv>
#include <functional>

#include <qdivisor/etatheta.hpp>
#include <qdivisor/linsolve.hpp>
#include <qdivisor/macmahon.hpp>

namespace qdivisor {

namespace {

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
}

int monomial_weight(const std::vector<EisensteinId> &basis, const QMExpr::Exponents &e)
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        w += e[i] * basis[i].weight;
    }
    return w;
}

// Evaluates monomials over a fixed basis, caching generator powers.
class MonomialEvaluator
{
public:
    MonomialEvaluator(const std::vector<EisensteinId> &basis, int order) : order_(order)
    {
        powers_.resize(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            powers_[i].push_back(QSeries::constant(1, order));
            powers_[i].push_back(eisenstein(basis[i], order));
        }
    }

    QSeries operator()(const QMExpr::Exponents &e)
    {
        QSeries out = QSeries::constant(1, order_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                out = mul(out, power(i, e[i]));
            }
        }
        return out;
    }

private:
    const QSeries &power(std::size_t i, int k)
    {
        auto &p = powers_[i];
        while (static_cast<int>(p.size()) <= k) {
            p.push_back(mul(p.back(), p[1]));
        }
        return p[static_cast<std::size_t>(k)];
    }

    int order_;
    std::vector<std::vector<QSeries>> powers_;
};

void enumerate_monomials(const std::vector<EisensteinId> &gens, int max_weight, std::size_t i,
                         QMExpr::Exponents &cur, int weight, std::vector<QMExpr::Exponents> &out)
{
    if (i == gens.size()) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; weight + k * gens[i].weight <= max_weight; ++k) {
        cur[i] = k;
        enumerate_monomials(gens, max_weight, i + 1, cur, weight + k * gens[i].weight, out);
    }
    cur[i] = 0;
}

// Folds one comparison into an aggregate report.
void absorb(IdentityReport &report, const QSeries &lhs, const QSeries &rhs, const std::string &label)
{
    report.checked += static_cast<std::size_t>(std::min(lhs.order(), rhs.order())) + 1;
    if (auto m = first_mismatch(lhs, rhs)) {
        const bool first = !report.first_mismatch || m->exponent < report.first_mismatch->exponent;
        report.record_mismatch(*m);
        if (first) {
            report.detail = label;
        }
    }
}

IdentityReport start_report(std::string id, int order)
{
    IdentityReport report;
    report.id = std::move(id);
    report.order_checked = order;
    return report;
}

template <class Body>
IdentityReport timed(std::string id, int order, Body &&body)
{
    IdentityReport report = start_report(std::move(id), order);
    {
        ReportTimer timer(report);
        body(report);
    }
    return report;
}

QSeries triangular_series(int order, int first_n, const std::function<Rational(int)> &weight)
{
    require_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = first_n; n * (n + 1) / 2 <= order; ++n) {
        c[n * (n + 1) / 2] = weight(n);
    }
    return QSeries(std::move(c));
}

Integer four_pow(int t)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, static_cast<unsigned long>(t));
    return r;
}

} // namespace

QSeries eisenstein(const EisensteinId &id, int order)
{
    require_order(order);
    if (id.level_scale < 1) {
        throw std::invalid_argument("eisenstein: level scale must be positive");
    }
    Rational c;
    int j = 0;
    switch (id.weight) {
    case 2:
        c = -24;
        j = 1;
        break;
    case 4:
        c = 240;
        j = 3;
        break;
    case 6:
        c = -504;
        j = 5;
        break;
    default:
        throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
    }
    const QSeries e = add(QSeries::constant(1, order), scale(lambert_S(j, order), c));
    return id.level_scale == 1 ? e : substitute_power(e, id.level_scale);
}

std::string to_string(const EisensteinId &id)
{
    std::string s = "E" + std::to_string(id.weight);
    if (id.level_scale != 1) {
        s += "@" + std::to_string(id.level_scale);
    }
    return s;
}

EisensteinId parse_eisenstein(std::string_view text)
{
    const auto fail = [&] { return std::invalid_argument("bad generator '" + std::string(text) + "'"); };
    if (text.size() < 2 || text[0] != 'E') {
        throw fail();
    }
    EisensteinId id;
    const auto at = text.find('@');
    const std::string_view w = text.substr(1, at == std::string_view::npos ? std::string_view::npos : at - 1);
    auto r = std::from_chars(w.data(), w.data() + w.size(), id.weight);
    if (r.ec != std::errc{} || r.ptr != w.data() + w.size()) {
        throw fail();
    }
    if (at != std::string_view::npos) {
        const std::string_view d = text.substr(at + 1);
        r = std::from_chars(d.data(), d.data() + d.size(), id.level_scale);
        if (r.ec != std::errc{} || r.ptr != d.data() + d.size()) {
            throw fail();
        }
    }
    if ((id.weight != 2 && id.weight != 4 && id.weight != 6) || id.level_scale < 1) {
        throw fail();
    }
    return id;
}

std::vector<EisensteinId> parse_basis(std::string_view text)
{
    std::vector<EisensteinId> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        out.push_back(parse_eisenstein(item));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty generator basis");
    }
    return out;
}

QMExpr::QMExpr(std::vector<EisensteinId> basis) : basis_(std::move(basis)) {}

void QMExpr::add_term(const Exponents &e, const Rational &c)
{
    if (e.size() != basis_.size()) {
        throw std::invalid_argument("QMExpr: exponent vector does not match the basis");
    }
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
        throw std::invalid_argument("QMExpr: negative exponent");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational QMExpr::coefficient(const Exponents &e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QMExpr::evaluate(int order) const
{
    require_order(order);
    MonomialEvaluator eval(basis_, order);
    QSeries out(order);
    for (const auto &[e, c] : terms_) {
        out = add(out, scale(eval(e), c));
    }
    return out;
}

QMExpr QMExpr::partial(std::size_t index) const
{
    if (index >= basis_.size()) {
        throw std::out_of_range("QMExpr::partial: index outside the basis");
    }
    QMExpr out(basis_);
    for (const auto &[e, c] : terms_) {
        if (e[index] > 0) {
            Exponents d = e;
            --d[index];
            out.add_term(d, c * e[index]);
        }
    }
    return out;
}

int QMExpr::max_weight() const
{
    int w = 0;
    for (const auto &[e, c] : terms_) {
        w = std::max(w, monomial_weight(basis_, e));
    }
    return w;
}

std::vector<QMExpr::Exponents> monomial_basis(const std::vector<EisensteinId> &generators, int max_weight)
{
    for (const auto &g : generators) {
        if (g.weight <= 0) {
            throw std::invalid_argument("monomial_basis: generator weights must be positive");
        }
    }
    std::vector<QMExpr::Exponents> out;
    if (max_weight < 0) {
        return out;
    }
    QMExpr::Exponents cur(generators.size());
    enumerate_monomials(generators, max_weight, 0, cur, 0, out);
    std::sort(out.begin(), out.end(), [&](const auto &x, const auto &y) {
        const int wx = monomial_weight(generators, x), wy = monomial_weight(generators, y);
        return wx != wy ? wx < wy : x < y;
    });
    return out;
}

QMExpr fit_quasimodular(const QSeries &target, const std::vector<EisensteinId> &generators, int max_weight)
{
    if (target.shift() != 0) {
        throw std::invalid_argument("fit_quasimodular: target must have integral exponents");
    }
    const auto monomials = monomial_basis(generators, max_weight);
    const int order = target.order();
    const std::size_t needed = monomials.size() + fit_margin;
    if (static_cast<std::size_t>(order) + 1 < needed) {
        throw InsufficientOrder("fit needs " + std::to_string(needed) + " coefficients, target has "
                                + std::to_string(order + 1));
    }
    MonomialEvaluator eval(generators, order);
    std::vector<QSeries> columns;
    columns.reserve(monomials.size());
    for (const auto &e : monomials) {
        columns.push_back(eval(e));
    }
    RationalMatrix a(static_cast<std::size_t>(order) + 1, std::vector<Rational>(monomials.size()));
    std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        for (std::size_t j = 0; j < monomials.size(); ++j) {
            a[n][j] = columns[j][n];
        }
        b[n] = target[n];
    }
    const auto sol = solve_exact(a, b);
    if (!sol) {
        std::string basis;
        for (const auto &g : generators) {
            basis += (basis.empty() ? "" : ",") + to_string(g);
        }
        throw Infeasible("no combination of {" + basis + "} monomials of weight <= " + std::to_string(max_weight)
                         + " matches the target to order " + std::to_string(order));
    }
    QMExpr expr(generators);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        expr.add_term(monomials[j], sol->x[j]);
    }
    if (!(expr.evaluate(order) == target)) {
        throw std::logic_error("fit_quasimodular: solution does not reproduce the target");
    }
    return expr;
}

Poly h_r_umbral_poly(int r)
{
    if (r < 1) {
        throw std::invalid_argument("h_r_umbral_poly: r must be positive");
    }
    Poly p{0, 1};
    for (int l = 1; l < r; ++l) {
        p = p * Poly{-l * l, 0, 1};
    }
    return p;
}

IdentityReport umbral_h_r_check(int r, int order)
{
    return timed("umbral-h" + std::to_string(r), order, [&](IdentityReport &report) {
        const QSeries lhs = scale(h_r_series(-2, r, order), Rational(factorial(2 * r - 1)));
        const QSeries rhs = umbral_evaluate(h_r_umbral_poly(r), order, [order](int j) { return lambert_S(j, order); });
        absorb(report, lhs, rhs, "(2r-1)! H_r(-2,q) vs umbral S expansion");
    });
}

QSeries a_t_series(int t, int order)
{
    if (t < 0) {
        throw std::invalid_argument("a_t_series: t must be non-negative");
    }
    return triangular_series(order, 0, [t](int n) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(2 * n + 1), static_cast<unsigned long>(t));
        return Rational(p);
    });
}

QSeries b_series(int order) { return a_t_series(0, order); }

QSeries one_plus_8d_pow(const QSeries &s, int t)
{
    QSeries out = s;
    for (int i = 0; i < t; ++i) {
        out = add(out, scale(derive(out), Rational(8)));
    }
    return out;
}

IdentityReport b_moment_check(int t, int order)
{
    return timed("b-moment-" + std::to_string(t), order, [&](IdentityReport &report) {
        absorb(report, one_plus_8d_pow(b_series(order), t), a_t_series(2 * t, order), "(1+8D)^t B vs A_2t");
    });
}

QSeries c_series(int order)
{
    require_order(order);
    const QSeries prod = mul(pochhammer_inf_plus({1, 1}, order), pochhammer_inf({2, 2}, order));
    return times_qpow(prod, ratio(1, 8));
}

IdentityReport c_series_check(int t, int order)
{
    if (t < 0) {
        throw std::invalid_argument("c_series_check: t must be non-negative");
    }
    return timed("c-series-" + std::to_string(t), order, [&](IdentityReport &report) {
        QSeries d = c_series(order);
        for (int i = 0; i < t; ++i) {
            d = derive(d);
        }
        Integer eight_t;
        mpz_ui_pow_ui(eight_t.get_mpz_t(), 8, static_cast<unsigned long>(t));
        const QSeries lhs = scale(times_qpow(d, ratio(-1, 8)), Rational(eight_t));
        absorb(report, lhs, one_plus_8d_pow(b_series(order), t), "8^t q^(-1/8) D^t C vs (1+8D)^t B");
    });
}

QSeries fact_sum_t(int t, int order)
{
    if (t < 0) {
        throw std::invalid_argument("fact_sum_t: t must be non-negative");
    }
    const Integer four_t = four_pow(t);
    return triangular_series(order, t, [&](int n) { return Rational(four_t * factorial(n + t) / factorial(n - t)); });
}

Poly fact_sum_umbral_poly(int t)
{
    if (t < 0) {
        throw std::invalid_argument("fact_sum_umbral_poly: t must be non-negative");
    }
    Poly p{1};
    for (int l = 1; l <= t; ++l) {
        p = p * Poly{-(2 * l - 1) * (2 * l - 1), 0, 1};
    }
    return p;
}

IdentityReport fact_sum_umbral_check(int t, int order)
{
    return timed("fact-sum-umbral-" + std::to_string(t), order, [&](IdentityReport &report) {
        const QSeries rhs = umbral_evaluate(fact_sum_umbral_poly(t), order, [order](int j) { return a_t_series(j, order); });
        absorb(report, fact_sum_t(t, order), rhs, "FactSumT_t vs umbral A expansion");
    });
}

IdentityReport fact_sum_integer_check(int t, int n_max)
{
    if (t < 0) {
        throw std::invalid_argument("fact_sum_integer_check: t must be non-negative");
    }
    return timed("fact-sum-integer-" + std::to_string(t), n_max, [&](IdentityReport &report) {
        const Integer four_t = four_pow(t);
        for (int n = 0; n <= n_max; ++n) {
            const Integer lhs = n >= t ? Integer(four_t * factorial(n + t) / factorial(n - t)) : Integer(0);
            Integer rhs = 1;
            for (int l = 1; l <= t; ++l) {
                rhs *= (2 * n + 1) * (2 * n + 1) - (2 * l - 1) * (2 * l - 1);
            }
            ++report.checked;
            if (lhs != rhs) {
                report.record_mismatch({n, Rational(lhs), Rational(rhs)});
            }
        }
    });
}

IdentityReport fact_sum_recursion_check(int t_max, int order)
{
    return timed("fact-sum-recursion", order, [&](IdentityReport &report) {
        QSeries prev = fact_sum_t(0, order);
        for (int t = 1; t <= t_max; ++t) {
            const QSeries cur = fact_sum_t(t, order);
            const QSeries rhs = sub(scale(derive(prev), Rational(8)), scale(prev, Rational(4 * t * (t - 1))));
            absorb(report, cur, rhs, "t=" + std::to_string(t));
            prev = cur;
        }
    });
}

std::vector<QSeries> diff_difference_series(int t_max, int order)
{
    require_order(order);
    if (t_max < 0) {
        throw std::invalid_argument("diff_difference_series: t_max must be non-negative");
    }
    const QSeries s1 = lambert_S(1, order);
    const QSeries u1 = sub(s1, scale(substitute_power(s1, 2), Rational(4)));
    std::vector<QSeries> out{QSeries::constant(1, order)};
    for (int t = 1; t <= t_max; ++t) {
        const QSeries &v = out.back();
        const QSeries w = sub(add(derive(v), mul(u1, v)), scale(v, Rational(binomial(t, 2))));
        out.push_back(scale(w, ratio(1, t * (2 * t - 1))));
    }
    return out;
}

IdentityReport diff_difference_check(int t_max, int order)
{
    if (t_max < 1) {
        throw std::invalid_argument("diff_difference_check: t_max must be at least 1");
    }
    return timed("diff-difference", order, [&](IdentityReport &report) {
        const auto rec = diff_difference_series(t_max, order);
        const XPoly product = u_product(2, t_max, order);
        const QSeries b_inv = invert(b_series(order));
        for (int t = 1; t <= t_max; ++t) {
            const std::string tag = "t=" + std::to_string(t) + " ";
            const MacParams p{2, t, order};
            absorb(report, rec[t], product[t], tag + "recursion vs product");
            absorb(report, rec[t], u_cheb(p), tag + "recursion vs cheb");
            if (t <= diff_difference_direct_t_max) {
                absorb(report, rec[t], u_direct(p), tag + "recursion vs direct");
            }
            const Rational alpha = ratio(1, four_pow(t) * factorial(2 * t));
            absorb(report, rec[t], scale(mul(fact_sum_t(t, order), b_inv), alpha), tag + "recursion vs alpha_t T_t / B");
        }
    });
}

De2Result de2_proposition_check(int t_max, int order)
{
    if (t_max < 1 || t_max > 4) {
        throw std::invalid_argument("de2_proposition_check: t_max must lie in 1..4");
    }
    De2Result result;
    result.report = start_report("de2-proposition", order);
    IdentityReport &report = result.report;
    {
        ReportTimer timer(report);
        [&] {
            const XPoly u = u_product(-2, t_max, order);
            const std::vector<EisensteinId> basis{{2, 1}, {4, 1}, {6, 1}};
            std::vector<QSeries> lhs, rhs;
            for (int t = 1; t <= t_max; ++t) {
                De2Row row;
                row.t = t;
                row.fit = fit_quasimodular(u[t], basis, 2 * t);
                lhs.push_back(row.fit.partial(0).evaluate(order));
                QSeries r(order);
                for (int j = 1; j <= t; ++j) {
                    r = add(r, scale(u[t - j], ratio(1, Integer(j * j) * binomial(2 * j, j))));
                }
                rhs.push_back(r);
                for (int n = 0; n <= order; ++n) {
                    if (r[n] != 0) {
                        row.constant = lhs.back()[n] / r[n];
                        break;
                    }
                }
                if (row.constant) {
                    row.residual = first_mismatch(lhs.back(), scale(r, *row.constant));
                }
                result.rows.push_back(std::move(row));
            }
            // The constant is fixed by t = 1 and then required at every t.
            const auto &c = result.rows.front().constant;
            if (!c) {
                report.detail = "right side vanishes at t=1";
                report.record_mismatch({0, lhs.front()[0], 0});
                return;
            }
            for (std::size_t i = 0; i < result.rows.size(); ++i) {
                absorb(report, lhs[i], scale(rhs[i], *c), "t=" + std::to_string(i + 1));
            }
            if (report.passed()) {
                result.constant = c;
                report.detail = "constant " + to_string(*c);
            }
        }();
    }
    return result;
}

} // namespace qdivisor
