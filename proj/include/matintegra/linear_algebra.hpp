#pragma once

// Exact dense linear algebra over Gaussian rationals (Gauss-Jordan with
// nonzero pivots).

#include <optional>

#include "matintegra/exact_complex.hpp"

namespace matintegra {

/// A solution x of a x = b when the system is consistent; the free variables
/// of an underdetermined system are set to zero.
std::optional<Vector<ExactComplex>> solve_exact(const ExactMatrix& a, const Vector<ExactComplex>& b);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<ExactMatrix> inverse_exact(const ExactMatrix& a);

}  // namespace matintegra
