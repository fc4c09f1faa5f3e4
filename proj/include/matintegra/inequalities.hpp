#pragma once

// Inequalities between zeros and critical points, checked numerically (and
// exactly where the data allow):
//
//   Schoenberg:        sum |w_i|^2 <= |G|^2 + (n - 2)/n sum |z_i|^2
//   dual Schoenberg:   sum |z_i|^2 <= eigenvalue data of the least-norm
//                      integral, via Schur's inequality
//   Schur:             sum |lambda_i(A)|^2 <= ||A||_F^2
//
// plus a Gerschgorin-type localisation of the zeros around the critical
// points.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "matintegra/matrix_integration.hpp"
#include "matintegra/roots.hpp"

namespace matintegra {

inline constexpr double kDefaultInequalityTolerance = 1e-8;

struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    /// rhs - lhs
    double slack = 0.0;
    /// |slack| <= tolerance * max(|lhs|, |rhs|)
    bool equality = false;
    /// The stated equality condition (collinearity, realness,
    /// normality).
    bool condition_met = false;
    double tolerance = kDefaultInequalityTolerance;
    /// Present when the side was computed in exact arithmetic.
    std::optional<Rational> exact_lhs;
    std::optional<Rational> exact_rhs;
};

class RepeatedCriticalPointsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No full integral exists, so the dual inequality does not apply.
class NoFullIntegralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic mean of a list of points.
ApproxComplex centroid(std::span<const ApproxComplex> points);

/// Whether the points lie on one line: least-squares line through them,
/// maximum orthogonal deviation <= tolerance * (1 + spread).
bool collinear(std::span<const ApproxComplex> points, double tolerance = kDefaultInequalityTolerance);

/// Schoenberg's inequality for the monic polynomial with the given zeros
/// (n >= 2). condition_met is collinearity of the zeros.
InequalityReport schoenberg_check(std::span<const ApproxComplex> zeros,
                                  double tolerance = kDefaultInequalityTolerance);

/// Dual Schoenberg inequality for a monic f with a full integral F:
///   sum |z_i|^2 <= sum |a_i|^2 + sum alpha_i |b_i|^2 + |G|^2
///                  + 2 (n + 1) sum |F(a_i) / rho_i|,
/// rho_i = (f / (x - a_i))(a_i), z the n + 1 roots of F. condition_met: every
/// (F(a_i) / rho_i) * conj(a_i - G) is real. Equality itself holds exactly
/// when the least-norm integral is normal, which this realness test neither
/// implies nor follows from: a negative t_i on real data gives an imaginary
/// border entry and a strict inequality, while x^2 (x^2 + 1) has equality
/// with the test failing. Throws NoFullIntegralError.
InequalityReport dual_schoenberg_check(const ExactFactoredPoly& f, double tolerance = kDefaultInequalityTolerance);

/// The same inequality for a polynomial p of degree n >= 2 with distinct
/// critical points w_i:
///   sum |z_i|^2 <= |G|^2 + sum |w_i|^2 + 2 n sum |p(w_i) / p''(w_i)|.
/// Throws RepeatedCriticalPointsError.
InequalityReport dual_schoenberg_from_p(const ApproxPoly& p, double tolerance = kDefaultInequalityTolerance);

struct Disk {
    ApproxComplex center;
    double radius = 0.0;
    bool contains(ApproxComplex z, double slack = 0.0) const { return std::abs(z - center) <= radius + slack; }
};

struct ZeroLocalization {
    std::vector<Disk> disks;
    std::vector<ApproxComplex> zeros;
    bool all_zeros_covered = false;
};

/// Disks D_i = {|z - w_i| <= s}, i < n, and D_n = {|z - G| <= (n / s) sum
/// |p(w_i) / p''(w_i)|} with s = max |z_j|, which together contain every zero
/// of p. Throws RepeatedCriticalPointsError, and std::invalid_argument when
/// s = 0.
ZeroLocalization gerschgorin_zero_localization(const ApproxPoly& p, double membership_tolerance = 1e-8);

/// Schur's inequality for a square matrix; condition_met is normality,
/// ||A A* - A* A||_F <= tolerance * ||A||_F^2.
InequalityReport schur_check(const ApproxMatrix& a, double tolerance = kDefaultInequalityTolerance);

}  // namespace matintegra
