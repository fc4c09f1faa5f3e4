#pragma once

// Brute-force exact checks that the constructive modules are measured
// against, and seeded random instance generation.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "matintegra/matrix_integration.hpp"
#include "matintegra/polynomial.hpp"

namespace matintegra {

/// det(xI - A) by the Faddeev-LeVerrier recursion.
ExactPoly char_poly_exact(const ExactMatrix& a);

/// det(xI - A) by cofactor expansion over polynomial entries. Factorial cost;
/// intended for n <= 5 as a second, independent route.
ExactPoly char_poly_cofactor(const ExactMatrix& a);

/// Rank by fraction-free (Bareiss) elimination after scaling every row to
/// Gaussian-integer entries. Works for rectangular matrices.
int rank_exact(const ExactMatrix& a);

/// n - rank(A) for a square A.
int kernel_dimension_exact(const ExactMatrix& a);

/// Geometric multiplicity equals algebraic multiplicity for every listed
/// eigenvalue. The list must contain every repeated eigenvalue of A with its
/// exact multiplicity; eigenvalues left out must be simple. Throws
/// std::invalid_argument when the list is inconsistent with det(xI - A).
bool is_diagonalizable_exact(const ExactMatrix& a, std::span<const RootFactor<ExactComplex>> eigenvalues);

/// Root-free test: the squarefree part of the characteristic polynomial
/// annihilates A.
bool is_diagonalizable_by_minimal_polynomial(const ExactMatrix& a);

/// Eigenvalues of the integral `a` that can be read off exactly: diagonal
/// entries of the base matrix with their multiplicity in p_A, every one of
/// them that is a root of p_A.
std::vector<RootFactor<ExactComplex>> known_eigenvalues(const ExactBordered& a);

struct InstanceProfile {
    int simple = 0;
    int multiple = 0;
    /// Degree range; used to spread extra multiplicity over the blocks.
    int min_degree = 0;
    int max_degree = 0;
    /// Bound on |numerator| and denominator of sampled rationals.
    int height = 50;
    /// Sample Gaussian rationals instead of rationals.
    bool gaussian = false;
    /// Choose the last simple root so that a full integral exists. Supported
    /// for multiple <= 2 (simple >= 1 when multiple == 2).
    bool force_integrable = false;
};

/// Deterministic stream of random instances of a fixed (simple, multiple)
/// type. Throws std::invalid_argument for impossible profiles.
class InstanceGenerator {
public:
    InstanceGenerator(std::uint64_t seed, InstanceProfile profile);

    ExactFactoredPoly next_polynomial();
    ExactDiagonalSpec next_diagonal();

    Rational next_rational();
    ExactComplex next_scalar();

    const InstanceProfile& profile() const { return profile_; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::vector<ExactComplex> distinct_scalars(std::size_t count);
    std::vector<int> block_multiplicities();
    std::vector<RootFactor<ExactComplex>> draw_factors();

    InstanceProfile profile_;
    std::mt19937_64 rng_;
};

}  // namespace matintegra
