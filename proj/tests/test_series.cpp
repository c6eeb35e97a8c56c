#include <doctest.h>

#include <qdivisor/poly.hpp>
#include <qdivisor/rational.hpp>
#include <qdivisor/series.hpp>
#include <qdivisor/xpoly.hpp>

#include "properties.hpp"

using namespace qdivisor;
using qdivisor::testing::SeriesGen;

TEST_SUITE("rational") {

TEST_CASE("ratio canonicalizes sign and common factors") {
    CHECK(ratio(6, -4) == Rational(-3, 2));
    CHECK(ratio(6, -4).get_den() == 2);
    CHECK(to_string(ratio(10, 5)) == "2");
    CHECK(to_string(ratio(-3, 9)) == "-1/3");
    CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
}

TEST_CASE("parse_rational round trips and rejects junk") {
    SeriesGen g(17);
    for (int i = 0; i < 500; ++i) {
        const Rational r = g.rational() * 1000003;
        CHECK(parse_rational(to_string(r)) == r);
    }
    CHECK(parse_rational("-12/8") == ratio(-3, 2));
    CHECK(parse_rational("+7") == 7);
    for (const char *bad : {"", "1/", "/2", "1//2", "a", "1.5", "3/0", "--1", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS(parse_rational(bad));
    }
}

TEST_CASE("binomial and factorial") {
    // Pascal's rule as the oracle.
    for (long n = 1; n <= 30; ++n) {
        for (long k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
    CHECK(power(ratio(-2, 3), 3) == ratio(-8, 27));
    CHECK(power(ratio(2, 3), -2) == ratio(9, 4));
}

}

TEST_SUITE("series") {

TEST_CASE("construction folds integral shifts") {
    const QSeries a({1, 2, 3}, 2);
    CHECK(a.shift() == 0);
    CHECK(a.order() == 4);
    CHECK(a[0] == 0);
    CHECK(a[2] == 1);
    const QSeries b({1, 2}, ratio(9, 8));
    CHECK(b.shift() == ratio(1, 8));
    CHECK(b[1] == 1);
    CHECK_THROWS_AS(QSeries({1}, ratio(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
}

TEST_CASE("products truncate to the smaller order") {
    const QSeries a({1, 1, 1, 1, 1, 1});
    const QSeries b({1, -1, 0});
    const QSeries p = a * b;
    CHECK(p.order() == 2);
    CHECK(p == QSeries({1, 0, 0}));
    CHECK_THROWS_AS(a + QSeries({1}, ratio(1, 2)), ShiftMismatch);
}

TEST_CASE("geometric series and Euler's product") {
    const QSeries g = invert(QSeries({1, -1, 0, 0, 0, 0, 0, 0}));
    for (int n = 0; n <= 7; ++n) {
        CHECK(g[n] == 1);
    }
    // 1/(q;q) counts partitions: 1 1 2 3 5 7 11 15 22 30 42
    QSeries poch = QSeries::constant(1, 10);
    for (int m = 1; m <= 10; ++m) {
        poch = poch * (QSeries::constant(1, 10) - QSeries::monomial(1, m, 10));
    }
    const QSeries p = invert(poch);
    const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(p[n] == partitions[n]);
    }
}

TEST_CASE("invert rejects non-units") {
    CHECK_THROWS_AS(invert(QSeries({0, 1})), NonUnitConstantTerm);
    CHECK_THROWS_AS(invert(QSeries({1, 1}, ratio(1, 8))), NonUnitConstantTerm);
}

TEST_CASE("D and fractional shifts") {
    const QSeries a({3, 5}, ratio(1, 8));
    const QSeries d = derive(a);
    CHECK(d.shift() == ratio(1, 8));
    CHECK(d[0] == ratio(3, 8));
    CHECK(d[1] == ratio(45, 8));
    const QSeries t = times_qpow(a, ratio(7, 8));
    CHECK(t.shift() == 0);
    CHECK(t[1] == 3);
}

TEST_CASE("substitute_power keeps the order") {
    const QSeries a({1, 2, 3, 4, 5});
    const QSeries s = substitute_power(a, 2);
    CHECK(s.order() == 4);
    CHECK(s == QSeries({1, 0, 2, 0, 3}));
    CHECK_THROWS_AS(substitute_power(a, 0), std::invalid_argument);
}

TEST_CASE("coefficient access is range checked") {
    const QSeries a({1, 2});
    CHECK(coefficient(a, 1) == 2);
    CHECK_THROWS_AS(coefficient(a, 2), OutOfRange);
    CHECK_THROWS_AS(a.truncated(3), OutOfRange);
}

TEST_CASE("pow agrees with repeated multiplication") {
    SeriesGen g(3);
    for (int i = 0; i < 50; ++i) {
        const QSeries a = g.series(8);
        QSeries acc = QSeries::constant(1, 8);
        for (unsigned e = 0; e <= 5; ++e) {
            CHECK(pow(a, e) == acc);
            acc = acc * a;
        }
    }
}

TEST_CASE("parallel product matches the serial one") {
    SeriesGen g(11);
    for (int i = 0; i < 40; ++i) {
        const QSeries a = g.series(g.uniform(0, 300));
        const QSeries b = g.series(g.uniform(0, 300));
        CHECK(mul(a, b) == mul_serial(a, b));
    }
}

TEST_CASE("engine properties over 1000 random cases each") {
    for (const auto &run : qdivisor::testing::engine_properties(1000)) {
        CAPTURE(run.name);
        CAPTURE(run.first_failure);
        CHECK(run.cases == 1000);
        CHECK(run.failures == 0);
    }
}

}

TEST_SUITE("poly and xpoly") {

TEST_CASE("poly arithmetic and composition") {
    const Poly p{1, -2, 1};
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(1) == 0);
    CHECK(p.compose_affine(1, 1) == Poly{0, 0, 1});
    CHECK(p - p == Poly{});
    CHECK((p * Poly{1, 1}).evaluate(3) == 16);
}

TEST_CASE("formal log of a product is the sum of logs") {
    SeriesGen g(5);
    const int order = 8;
    std::vector<QSeries> f1{QSeries::constant(1, order)};
    std::vector<QSeries> f2{QSeries::constant(1, order)};
    for (int t = 1; t <= 3; ++t) {
        f1.push_back(g.series(order));
        f2.push_back(g.series(order));
    }
    const XPoly a(f1);
    const XPoly b(f2);
    CHECK(formal_log(mul(a, b, 3)) == add(formal_log(a), formal_log(b)));
    CHECK(reflect(reflect(a)) == a);
}

}
