#pragma once

#include <optional>
#include <vector>

#include <qdivisor/rational.hpp>

namespace qdivisor {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    std::vector<Rational> x;
    int rank = 0;
};

// Solves A x = b exactly for any shape of A (rows may exceed columns).
// Rows are cleared of denominators and the augmented matrix is brought to
// echelon form by Bareiss fraction-free elimination over the integers.
// Returns nullopt when the system is inconsistent. When A is rank deficient
// the free variables are set to zero.
std::optional<LinearSolution> solve_exact(const RationalMatrix &a, const std::vector<Rational> &b);

} // namespace qdivisor
