#pragma once

#include <stdexcept>
#include <string>

#include <qdivisor/report.hpp>
#include <qdivisor/series.hpp>
#include <qdivisor/xpoly.hpp>

namespace qdivisor {

struct UnsupportedA : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Route { direct, product, cheb };

// U_t(a, q) truncated at q^order, with a in {-2, -1, 0, 1, 2}.
struct MacParams {
    int a = 0;
    int t = 1;
    int order = 0;
};

struct RouteResult {
    Route route = Route::direct;
    QSeries series;
};

bool supported_a(int a);
void require_supported_a(int a);
const char *to_string(Route route);

// Q_m(a, q) = q^m / (1 + a q^m + q^(2m))
QSeries q_m_factor(int a, int m, int order);

// Sum over strictly increasing index tuples of prod Q_{n_k}, by recursive
// descent pruned on the exponent budget. Runs in checked 64-bit integers
// (every partial product has integer coefficients) and throws
// std::overflow_error if that is ever exceeded. The top-level index is split
// across OpenMP threads; u_direct_serial is the single-threaded reference.
QSeries u_direct(const MacParams &p);
QSeries u_direct_serial(const MacParams &p);

// prod_{m=1}^{order} (1 + Q_m x) truncated at x^t_max; entry t is U_t(a, q).
XPoly u_product(int a, int t_max, int order);

// Pochhammer-quotient prefactor prod 1/((1 + a q^n + q^(2n))(1 - q^n)) in
// its simplified eta-quotient form for each a.
QSeries mac_prefactor(int a, int order);
// The same prefactor straight from the unsimplified product.
QSeries raw_prefactor(int a, int order);

// Coefficient multiplying q^(n(n+1)/2) in the closed form of U_t(a, q).
Rational u_cheb_inner_coeff(int n, int t, int a);

// prefactor * sum_{n(n+1)/2 <= order} u_cheb_inner_coeff(n, t, a) q^(n(n+1)/2)
QSeries u_cheb(const MacParams &p);

RouteResult compute_route(Route route, const MacParams &p);

// MO(a, t; n), cross-checked across all three routes.
Rational mo_coeff(int a, int t, int n);

// MO(1, t; 3n + 2) == 0 for 1 <= t <= t_max, 3n + 2 <= order.
IdentityReport scan_congruence_2mod3(int t_max, int order);

// 3 | MO(1, 3; 3n + 1) for 3n + 1 <= order.
IdentityReport scan_congruence_1mod3_mod3(int order);

// H_r(a, q) = sum_{m>=1} Q_m(a, q)^r
QSeries h_r_series(int a, int r, int order);

// -log F(-x; a, q) == sum_r H_r(a, q) x^r / r up to x^r_max.
IdentityReport newton_log_check(int a, int r_max, int order);

} // namespace qdivisor
