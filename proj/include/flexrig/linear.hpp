#pragma once

#include <optional>
#include <vector>

#include "flexrig/rational.hpp"

namespace flexrig {

/// Affine solution set of a linear system: particular + span(nullspace).
struct LinearSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

/// Exact Gaussian elimination over the rationals.
///
/// Returns the full solution set, or empty when the system is inconsistent.
/// The particular solution sets all free variables to zero; the nullspace
/// basis has one vector per free column with a 1 in that coordinate, which
/// makes downstream parameter searches reproducible.
std::optional<LinearSolution> linear_solve(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs);

} // namespace flexrig
