#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qdivisor/poly.hpp>
#include <qdivisor/report.hpp>
#include <qdivisor/series.hpp>

namespace qdivisor {

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// E_weight(q^level_scale)
struct EisensteinId {
    int weight = 2;
    int level_scale = 1;

    friend bool operator==(const EisensteinId &, const EisensteinId &) = default;
    friend auto operator<=>(const EisensteinId &, const EisensteinId &) = default;
};

// E2 = 1 - 24 S1, E4 = 1 + 240 S3, E6 = 1 - 504 S5, then q -> q^d.
QSeries eisenstein(const EisensteinId &id, int order);

// "E2", "E4@2", ...
std::string to_string(const EisensteinId &id);
EisensteinId parse_eisenstein(std::string_view text);
// Comma separated list such as "E2,E2@2".
std::vector<EisensteinId> parse_basis(std::string_view text);

// Rational combination of monomials in a fixed list of generators.
class QMExpr
{
public:
    using Exponents = std::vector<int>;

    QMExpr() = default;
    explicit QMExpr(std::vector<EisensteinId> basis);

    const std::vector<EisensteinId> &basis() const { return basis_; }
    const std::map<Exponents, Rational> &terms() const { return terms_; }

    // Adds c to the coefficient of the monomial; zero coefficients are dropped.
    void add_term(const Exponents &e, const Rational &c);
    Rational coefficient(const Exponents &e) const;

    // Expands to a q-series to the given order.
    QSeries evaluate(int order) const;
    // Formal partial derivative in the generator at basis position index.
    QMExpr partial(std::size_t index) const;
    int max_weight() const;

    friend bool operator==(const QMExpr &, const QMExpr &) = default;

private:
    std::vector<EisensteinId> basis_;
    std::map<Exponents, Rational> terms_;
};

// Exponent vectors with total weight <= max_weight, ordered by
// (total weight, lexicographic exponents).
std::vector<QMExpr::Exponents> monomial_basis(const std::vector<EisensteinId> &generators, int max_weight);

inline constexpr int fit_margin = 20;

// Expresses target as a rational combination of generator monomials of
// weight <= max_weight using every available coefficient. Throws
// InsufficientOrder when target.order() + 1 < dimension + fit_margin and
// Infeasible when no combination matches.
QMExpr fit_quasimodular(const QSeries &target, const std::vector<EisensteinId> &generators, int max_weight);

// Polynomial in an umbra u with u^j replaced by moment(j).
template <class Moment>
QSeries umbral_evaluate(const Poly &p, int order, Moment &&moment)
{
    QSeries out(order);
    for (int j = 0; j <= p.degree(); ++j) {
        if (p[j] != 0) {
            out = add(out, scale(moment(j), p[j]));
        }
    }
    return out;
}

// u (u^2 - 1^2) (u^2 - 2^2) ... (u^2 - (r-1)^2)
Poly h_r_umbral_poly(int r);
// (2r-1)! H_r(-2, q) == h_r_umbral_poly(r) with u^j -> S_j(q)
IdentityReport umbral_h_r_check(int r, int order);

// A_t(q) = sum_{n>=0} (2n+1)^t q^(n(n+1)/2)
QSeries a_t_series(int t, int order);
// B(q) = sum_{n>=0} q^(n(n+1)/2)
QSeries b_series(int order);
// (1 + 8D)^t applied to s
QSeries one_plus_8d_pow(const QSeries &s, int t);
// (1 + 8D)^t B == A_{2t}
IdentityReport b_moment_check(int t, int order);

// C(q) = q^(1/8) prod_{m>=1} (1 + q^m)(1 - q^(2m))
QSeries c_series(int order);
// 8^t q^(-1/8) D^t C == (1 + 8D)^t B
IdentityReport c_series_check(int t, int order);

// 4^t sum_{n>=t} (n+t)!/(n-t)! q^(n(n+1)/2)
QSeries fact_sum_t(int t, int order);
// prod_{l=1}^{t} (u^2 - (2l-1)^2)
Poly fact_sum_umbral_poly(int t);
// fact_sum_t == fact_sum_umbral_poly(t) with u^j -> A_j
IdentityReport fact_sum_umbral_check(int t, int order);
// 4^t (n+t)!/(n-t)! == prod_{l=1}^{t} ((2n+1)^2 - (2l-1)^2) for 0 <= n <= n_max
IdentityReport fact_sum_integer_check(int t, int n_max);
// FactSumT_t == (8D - 4t(t-1)) FactSumT_{t-1} for 1 <= t <= t_max
IdentityReport fact_sum_recursion_check(int t_max, int order);

// U_t(2, q) from U_t = (D + U_1 - binom(t, 2)) U_{t-1} / (t (2t - 1)),
// U_0 = 1, U_1 = S_1(q) - 4 S_1(q^2). Entry t holds U_t.
std::vector<QSeries> diff_difference_series(int t_max, int order);
// The direct tuple sum grows like order^t / (t!)^2; past this t the check
// relies on the product and Chebyshev routes alone.
inline constexpr int diff_difference_direct_t_max = 4;

// The recursion against the macmahon routes and against
// U_t(2, q) = T_t / (4^t (2t)! B) for 1 <= t <= t_max.
IdentityReport diff_difference_check(int t_max, int order);

struct De2Row {
    int t = 0;
    // Ratio read off at the first nonzero coefficient of the right side.
    std::optional<Rational> constant;
    // First coefficient where lhs != constant * rhs, if any.
    std::optional<Mismatch> residual;
    QMExpr fit;
};

struct De2Result {
    std::vector<De2Row> rows;
    // The common constant when every row agrees on one exact value.
    std::optional<Rational> constant;
    IdentityReport report;
};

// Fits U_t(-2, q) over {E2, E4, E6} with weight <= 2t, differentiates in E2
// and compares with c sum_{j=1}^{t} U_{t-j}(-2, q) / (j^2 binom(2j, j)),
// solving for c separately at each t.
De2Result de2_proposition_check(int t_max, int order);

} // namespace qdivisor
