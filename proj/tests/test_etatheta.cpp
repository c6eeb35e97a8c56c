#include <doctest.h>

#include <cmath>

#include <qdivisor/etatheta.hpp>

#include "support.hpp"

using namespace qdivisor;
using qdivisor::testing::naive_sigma;

namespace {

// Number of integer vectors of length d with squared norm n, by enumeration.
long sum_of_squares_count(int d, long n)
{
    const long r = static_cast<long>(std::sqrt(static_cast<double>(n))) + 1;
    if (d == 1) {
        long c = 0;
        for (long x = -r; x <= r; ++x) {
            c += x * x == n;
        }
        return c;
    }
    long c = 0;
    for (long x = -r; x <= r; ++x) {
        if (x * x <= n) {
            c += sum_of_squares_count(d - 1, n - x * x);
        }
    }
    return c;
}

// Partition counts by the standard coin-change recurrence.
std::vector<long> partition_numbers(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) {
            p[m] += p[m - part];
        }
    }
    return p;
}

} // namespace

TEST_SUITE("etatheta") {

TEST_CASE("pentagonal numbers") {
    CHECK(pentagonal(0) == 0);
    CHECK(pentagonal(1) == 2);
    CHECK(pentagonal(-1) == 1);
    CHECK(pentagonal(2) == 7);
    CHECK(pentagonal(-2) == 5);
}

TEST_CASE("Euler's pentagonal sum inverts to partition counts") {
    const int order = 80;
    const QSeries inv = invert(euler_pentagonal(order));
    const auto p = partition_numbers(order);
    for (int n = 0; n <= order; ++n) {
        CHECK(inv[n] == p[n]);
    }
    CHECK(euler_pentagonal(order) == pochhammer_inf({1, 1}, order));
}

TEST_CASE("Pochhammer products against distinct-part counts") {
    // (-q; q) counts partitions into distinct parts, equal to odd-part counts.
    const int order = 40;
    const QSeries d = pochhammer_inf_plus({1, 1}, order);
    const QSeries odd = invert(pochhammer_inf({1, 2}, order));
    CHECK(d == odd);
    CHECK(d[10] == 10);
    CHECK_THROWS_AS(pochhammer_inf({0, 1}, order), std::invalid_argument);
}

TEST_CASE("theta3 powers count representations by sums of squares") {
    const int order = 40;
    const QSeries t = theta3(1, order);
    const QSeries t2 = t * t;
    const QSeries t3 = t2 * t;
    for (int n = 0; n <= order; ++n) {
        CHECK(t[n] == sum_of_squares_count(1, n));
        CHECK(t2[n] == sum_of_squares_count(2, n));
        CHECK(t3[n] == sum_of_squares_count(3, n));
    }
    const QSeries alt = theta3(2, order, true);
    CHECK(alt[2] == -2);
    CHECK(alt[8] == 2);
    CHECK(alt[3] == 0);
}

TEST_CASE("theta2 carries the quarter shift") {
    const QSeries t = theta2(1, 12);
    CHECK(t.shift() == ratio(1, 4));
    CHECK(t[0] == 2);
    CHECK(t[2] == 2);
    CHECK(t[6] == 2);
    CHECK(t[1] == 0);
    CHECK(theta2(4, 12).shift() == 0);
}

TEST_CASE("divisor sums") {
    for (long n = 1; n <= 300; ++n) {
        CHECK(sigma(n) == naive_sigma(n));
    }
    CHECK(sigma_power(3, 6) == 1 + 8 + 27 + 216);
    const QSeries s5 = lambert_S(5, 30);
    for (int n = 1; n <= 30; ++n) {
        Integer acc = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                Integer p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), 5);
                acc += p;
            }
        }
        CHECK(s5[n] == Rational(acc));
    }
    CHECK(lambert_S(0, 10)[0] == 0);
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
}

TEST_CASE("Jacobi triple product at z = 1") {
    CHECK(jtp_z1_check(150).passed());
}

}
