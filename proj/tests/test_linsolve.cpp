#include <doctest.h>

#include <qdivisor/linsolve.hpp>

#include "support.hpp"

using namespace qdivisor;
using qdivisor::testing::SeriesGen;

namespace {

std::vector<Rational> times_vector(const RationalMatrix &a, const std::vector<Rational> &x)
{
    std::vector<Rational> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            b[i] += a[i][j] * x[j];
        }
    }
    return b;
}

// Rank by plain rational Gaussian elimination, the textbook way.
int oracle_rank(RationalMatrix m)
{
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != static_cast<std::size_t>(rank) && m[r][c] != 0) {
                const Rational f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
                for (std::size_t k = c; k < cols; ++k) {
                    m[r][k] -= f * m[static_cast<std::size_t>(rank)][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

RationalMatrix random_matrix(SeriesGen &g, int rows, int cols, int rank)
{
    // rows x rank times rank x cols has rank <= rank
    RationalMatrix l(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(rank)));
    RationalMatrix r(static_cast<std::size_t>(rank), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto &row : l) {
        for (auto &x : row) {
            x = g.rational();
        }
    }
    for (auto &row : r) {
        for (auto &x : row) {
            x = g.rational();
        }
    }
    RationalMatrix a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            for (int k = 0; k < rank; ++k) {
                a[i][j] += l[i][k] * r[k][j];
            }
        }
    }
    return a;
}

} // namespace

TEST_SUITE("linsolve") {

TEST_CASE("consistent random systems of every shape") {
    SeriesGen g(99);
    for (int it = 0; it < 300; ++it) {
        const int rows = g.uniform(1, 8);
        const int cols = g.uniform(1, 8);
        const int rank = g.uniform(0, std::min(rows, cols));
        const RationalMatrix a = random_matrix(g, rows, cols, rank);
        std::vector<Rational> x0(static_cast<std::size_t>(cols));
        for (auto &x : x0) {
            x = g.rational();
        }
        const auto b = times_vector(a, x0);
        const auto sol = solve_exact(a, b);
        REQUIRE(sol.has_value());
        CHECK(times_vector(a, sol->x) == b);
        CHECK(sol->rank == oracle_rank(a));
    }
}

TEST_CASE("inconsistent systems are reported") {
    SeriesGen g(7);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        const int rows = g.uniform(2, 8);
        const int cols = g.uniform(1, rows - 1);
        const RationalMatrix a = random_matrix(g, rows, cols, g.uniform(0, cols));
        std::vector<Rational> b(static_cast<std::size_t>(rows));
        for (auto &x : b) {
            x = g.rational();
        }
        RationalMatrix aug = a;
        for (int i = 0; i < rows; ++i) {
            aug[i].push_back(b[i]);
        }
        const bool consistent = oracle_rank(aug) == oracle_rank(a);
        CHECK(solve_exact(a, b).has_value() == consistent);
        checked += !consistent;
    }
    CHECK(checked > 100);
}

TEST_CASE("small hand cases") {
    using Vec = std::vector<Rational>;
    const auto s = solve_exact(RationalMatrix{{2, 1}, {1, 3}}, Vec{3, 5});
    REQUIRE(s);
    CHECK(s->x == Vec{ratio(4, 5), ratio(7, 5)});
    CHECK_FALSE(solve_exact(RationalMatrix{{1, 1}, {1, 1}}, Vec{1, 2}));
    const auto free = solve_exact(RationalMatrix{{1, 1}, {2, 2}}, Vec{1, 2});
    REQUIRE(free);
    CHECK(free->rank == 1);
    CHECK(free->x == Vec{1, 0});
    CHECK_THROWS_AS(solve_exact(RationalMatrix{{1, 2}, {1}}, Vec{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact(RationalMatrix{{1}}, Vec{1, 1}), std::invalid_argument);
}

}
