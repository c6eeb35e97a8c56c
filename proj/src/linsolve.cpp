#include <qdivisor/linsolve.hpp>

#include <stdexcept>
#include <utility>

namespace qdivisor {

namespace {

using IntRow = std::vector<Integer>;

IntRow clear_denominators(const std::vector<Rational> &row, const Rational &rhs)
{
    Integer l = 1;
    for (const auto &v : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size() + 1);
    for (const auto &v : row) {
        out.emplace_back(v.get_num() * (l / v.get_den()));
    }
    out.emplace_back(rhs.get_num() * (l / rhs.get_den()));
    return out;
}

} // namespace

std::optional<LinearSolution> solve_exact(const RationalMatrix &a, const std::vector<Rational> &b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("solve_exact: row count mismatch");
    }
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<IntRow> m;
    m.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) {
            throw std::invalid_argument("solve_exact: ragged matrix");
        }
        m.push_back(clear_denominators(a[i], b[i]));
    }

    // Fraction-free echelon form of [A | b]; every intermediate entry is a
    // minor of the input, so the division by the previous pivot is exact.
    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c <= cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (c == cols) {
            return std::nullopt;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    LinearSolution sol;
    sol.rank = static_cast<int>(pivot_cols.size());
    sol.x.assign(cols, Rational(0));
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t c = pivot_cols[k];
        Rational acc(m[k][cols]);
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (sol.x[j] != 0) {
                acc -= m[k][j] * sol.x[j];
            }
        }
        sol.x[c] = acc / Rational(m[k][c]);
        sol.x[c].canonicalize();
    }
    return sol;
}

} // namespace qdivisor
