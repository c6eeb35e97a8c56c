#include <doctest.h>

#include <algorithm>
#include <set>

#include <qdivisor/chebyshev.hpp>
#include <qdivisor/etatheta.hpp>
#include <qdivisor/identities.hpp>

#include "support.hpp"

using namespace qdivisor;
namespace id = qdivisor::identities;

TEST_SUITE("identities") {

TEST_CASE("registry is sorted, unique and complete") {
    const auto ids = id::ids();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const char *required : {"u1-0", "u1-1-pent", "u1-neg1-theta", "a113661", "u1-1-q4", "relay-q4", "lem-7.1-a",
                                 "lem-7.1-b", "lem-7.1-c", "hex-lattice", "ex-7-theta", "ex-7-eta", "prop-7-ft", "thm-1.1",
                                 "thm-2.3", "thm-3.2", "pent-theorem", "jtp-z1"}) {
        CAPTURE(required);
        CHECK(std::find(ids.begin(), ids.end(), required) != ids.end());
    }
    for (const auto &i : id::registry()) {
        CHECK_FALSE(i.description.empty());
        CHECK_FALSE(i.cutoff.empty());
        CHECK(static_cast<bool>(i.parts) != static_cast<bool>(i.run));
    }
    CHECK_THROWS_AS(id::find("no-such-identity"), id::UnknownIdentity);
    CHECK_THROWS_AS(id::check("no-such-identity", 10), id::UnknownIdentity);
    CHECK_THROWS_AS(id::evaluate_parts("thm-2.3", 10), std::invalid_argument);
}

TEST_CASE("every identity passes at order 60") {
    const auto reports = id::check_all(60);
    REQUIRE(reports.size() == id::registry().size());
    for (const auto &r : reports) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("parallel run matches the serial one") {
    const auto par = id::check_all(40);
    const auto ser = id::check_all_serial(40);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(qdivisor::testing::same_outcome(par[i], ser[i]));
    }
}

TEST_CASE("a perturbed coefficient is caught at its exponent") {
    for (const char *name : {"u1-0", "hex-lattice", "thm-1.1", "a113661"}) {
        auto parts = id::evaluate_parts(name, 50);
        REQUIRE_FALSE(parts.empty());
        id::Part &last = parts.back();
        std::vector<Rational> c(last.rhs.coeffs().begin(), last.rhs.coeffs().end());
        c[17] += ratio(1, 3);
        const Rational shift = last.rhs.shift();
        last.rhs = QSeries(c, shift);
        const IdentityReport r = id::compare_parts(name, 50, parts);
        CAPTURE(name);
        CHECK_FALSE(r.passed());
        REQUIRE(r.first_mismatch.has_value());
        CHECK(r.first_mismatch->exponent == 17);
        CHECK(r.first_mismatch->rhs - r.first_mismatch->lhs == ratio(1, 3));
        CHECK(r.detail.find(last.label) != std::string::npos);
    }
}

TEST_CASE("parts computed below the requested order are rejected") {
    std::vector<id::Part> parts{{"short", QSeries(10), QSeries(10)}};
    CHECK_THROWS_AS(id::compare_parts("x", 20, parts), std::logic_error);
}

TEST_CASE("the printed recurrence for f_t has a counterexample") {
    // f_t(n+2) - f_t(n+1) + f_t(n) = f_{t-1}(n) fails at t = 1, n = 0
    const Rational lhs = f_t_eval(1, 2) - f_t_eval(1, 1) + f_t_eval(1, 0);
    CHECK(lhs != f_t_eval(0, 0));
    CHECK(lhs == f_t_eval(0, 1));
}

TEST_CASE("a bilateral sum keeps the n = 0 term") {
    // The n = 0 term of sum_Z q^n/(1+q^n+q^2n) is 1/3; (theta3^3/theta3(q^3) - 1)/6 has no constant.
    const QSeries bilateral = id::bilateral_sum({0, 1}, {1, 1, 1}, 10);
    const QSeries t = theta3(1, 10);
    const QSeries rhs = scale(divide(t * t * t, theta3(3, 10)) - QSeries::constant(1, 10), ratio(1, 6));
    CHECK(bilateral[0] == ratio(1, 3));
    CHECK(rhs[0] == 0);
}

TEST_CASE("building blocks against enumeration") {
    // sum q^n/(1-q^n) has sigma_0 coefficients
    const QSeries d = id::lambert_family({0, 1}, {1, -1}, 40);
    for (int n = 1; n <= 40; ++n) {
        int divisors = 0;
        for (int k = 1; k <= n; ++k) {
            divisors += n % k == 0;
        }
        CHECK(d[n] == divisors);
    }
    const QSeries r = id::residue_lambert(3, 1, 30);
    for (int n = 1; n <= 30; ++n) {
        int c = 0;
        for (int k = 1; k <= n; ++k) {
            c += n % k == 0 && k % 3 == 1;
        }
        CHECK(r[n] == c);
    }
    // a^2 + ab + b^2 = 1 has six solutions
    const QSeries h = id::hex_lattice(20);
    CHECK(h[0] == 1);
    CHECK(h[1] == 6);
    CHECK(h[2] == 0);
    CHECK(h[3] == 6);
    CHECK(h[7] == 12);
    CHECK_THROWS_AS(id::lambert_family({1}, {1, -1}, 5), std::invalid_argument);
}

TEST_CASE("report order and ids") {
    const IdentityReport r = id::check("thm-1.1", 90);
    CHECK(r.id == "thm-1.1");
    CHECK(r.order_checked == 90);
    CHECK(r.passed());
    CHECK_THROWS_AS(id::check("thm-1.1", -1), std::invalid_argument);
}

}
