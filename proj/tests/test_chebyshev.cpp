#include <doctest.h>

#include <qdivisor/chebyshev.hpp>

#include "support.hpp"

using namespace qdivisor;

namespace {

// T_k as integer coefficient vectors from cos((k+1)x) = 2 cos x cos kx - cos((k-1)x).
std::vector<Integer> chebyshev_oracle(int k)
{
    std::vector<Integer> prev{1};
    std::vector<Integer> cur{0, 1};
    if (k == 0) {
        return prev;
    }
    for (int i = 1; i < k; ++i) {
        std::vector<Integer> next(cur.size() + 1);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += 2 * cur[j];
        }
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j] -= prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// [x^t] to_n((x + a + 2)/4) by expanding the odd Chebyshev polynomial directly.
Rational cheb_oracle(int n, int t, int a)
{
    const auto odd = chebyshev_oracle(2 * n + 1);
    Rational sum = 0;
    for (int i = t; i <= n; ++i) {
        // coefficient of X^i in to_n, then ((x + a + 2)/4)^i contributes binom(i, t) (a+2)^(i-t) / 4^i at x^t
        const Rational c(odd[2 * i + 1]);
        sum += c * Rational(binomial(i, t)) * power(Rational(a + 2), i - t) / power(Rational(4), i);
    }
    return sum;
}

// (-1)^(n-t) [z^n] z^t (1 + z) / (1 + a z + z^2)^(t+1) with plain vector arithmetic.
Rational riordan_oracle(int n, int t, int a)
{
    if (n < t) {
        return 0;
    }
    const std::size_t len = static_cast<std::size_t>(n - t) + 1;
    const auto base = qdivisor::testing::naive_reciprocal({1, a, 1}, len);
    std::vector<Rational> acc(len);
    acc[0] = 1;
    if (len > 1) {
        acc[1] = 1;
    }
    for (int i = 0; i <= t; ++i) {
        acc = qdivisor::testing::naive_mul(acc, base);
    }
    return ((n - t) % 2 == 0 ? 1 : -1) * acc[len - 1];
}

} // namespace

TEST_SUITE("chebyshev") {

TEST_CASE("chebyshev_t matches the trigonometric recurrence") {
    for (int k = 0; k <= 25; ++k) {
        const auto o = chebyshev_oracle(k);
        const Poly p = chebyshev_t(k);
        CHECK(p.degree() == k);
        for (int j = 0; j <= k; ++j) {
            CHECK(p[static_cast<std::size_t>(j)] == Rational(o[static_cast<std::size_t>(j)]));
        }
    }
}

TEST_CASE("to_n is T_{2n+1}(sqrt x)/sqrt x") {
    for (int n = 0; n <= 15; ++n) {
        const auto o = chebyshev_oracle(2 * n + 1);
        const Poly p = to_n_poly(n);
        CHECK(p.degree() == n);
        for (int i = 0; i <= n; ++i) {
            CHECK(p[static_cast<std::size_t>(i)] == Rational(o[2 * static_cast<std::size_t>(i) + 1]));
        }
    }
}

TEST_CASE("coefficient sum against direct expansion") {
    for (int a = -2; a <= 2; ++a) {
        for (int n = 0; n <= 12; ++n) {
            for (int t = 0; t <= n + 1; ++t) {
                CAPTURE(a);
                CAPTURE(n);
                CAPTURE(t);
                CHECK(cheb_coeff_sum({n, t, a}) == cheb_oracle(n, t, a));
            }
        }
    }
}

TEST_CASE("Riordan extraction against plain series arithmetic") {
    for (int a = -2; a <= 2; ++a) {
        for (int n = 0; n <= 14; ++n) {
            for (int t = 0; t <= n; ++t) {
                CHECK(riordan_coeff({n, t, a}) == riordan_oracle(n, t, a));
            }
        }
        const auto col = riordan_column(3, a, 20);
        for (int n = 0; n <= 20; ++n) {
            CHECK(col[static_cast<std::size_t>(n)] == riordan_coeff({n, 3, a}));
        }
    }
}

TEST_CASE("coefficient sum equals the Riordan coefficient on 0 <= t <= n <= 40") {
    for (int a = -2; a <= 2; ++a) {
        for (int t = 0; t <= 40; ++t) {
            const auto col = riordan_column(t, a, 40);
            for (int n = t; n <= 40; ++n) {
                CHECK(cheb_coeff_sum({n, t, a}) == col[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("closed forms at a = 2, -2, 0") {
    for (int n = 0; n <= 30; ++n) {
        for (int t = 0; t <= n; ++t) {
            // Moriarty's identity
            CHECK(cheb_coeff_sum({n, t, 2}) == Rational(binomial(n + t, 2 * t)));
            CHECK(riordan_closed_form({n, t, 2}) == cheb_coeff_sum({n, t, 2}));
            CHECK(riordan_closed_form({n, t, -2}) == cheb_coeff_sum({n, t, -2}));
            CHECK(riordan_closed_form({n, t, 0}) == cheb_coeff_sum({n, t, 0}));
        }
    }
    CHECK_THROWS_AS(riordan_closed_form({3, 1, 1}), std::invalid_argument);
}

TEST_CASE("c_n piecewise form for n <= 60") {
    for (int n = 0; n <= 60; ++n) {
        CHECK(c_n_closed(n) == cheb_coeff_sum({n, 2, 1}));
    }
    // first values from the piecewise statement
    const int expected[] = {0, 0, 1, 2, 0, -5, -7, 0, 12};
    for (int n = 0; n < 9; ++n) {
        CHECK(c_n_closed(n) == expected[n]);
    }
}

TEST_CASE("A128504 terms against 1/(1+z+z^2)^3") {
    const std::vector<Rational> tri{1, 1, 1, 0, 0, 0, 0};
    const auto cube = qdivisor::testing::naive_mul(qdivisor::testing::naive_mul(tri, tri), tri);
    const auto r = qdivisor::testing::naive_reciprocal(cube, 61);
    for (int n = 0; n <= 60; ++n) {
        CHECK(a128504_term(n) == r[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("f_t is the coefficient sum at a = 1") {
    for (int n = 0; n <= 25; ++n) {
        for (int t = 0; t <= n + 1; ++t) {
            CHECK(f_t_eval(t, n) == cheb_coeff_sum({n, t, 1}));
        }
    }
}

}
