#pragma once

// Full integrals of polynomials: antiderivatives that vanish at every
// multiple root of the integrand.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "matintegra/polynomial.hpp"

namespace matintegra {

/// No full integral: the antiderivative with zero constant takes the listed
/// (not all equal) values at the multiple roots, in factor order. The dense
/// route leaves the list empty.
struct NoFullIntegral {
    std::vector<ExactComplex> antiderivative_values;
};

/// Exactly one full integral; `constant` is its constant term.
struct UniqueFullIntegral {
    ExactPoly integral;
    ExactComplex constant;
};

/// No multiple roots, so every antiderivative qualifies. `integral` is the
/// representative with zero constant term.
struct FreeFullIntegral {
    ExactPoly integral;
};

using FullIntegralOutcome = std::variant<NoFullIntegral, UniqueFullIntegral, FreeFullIntegral>;

inline bool has_full_integral(const FullIntegralOutcome& o) { return !std::holds_alternative<NoFullIntegral>(o); }

/// The integral carried by a Unique or Free outcome; throws std::logic_error
/// for NoFullIntegral.
const ExactPoly& integral_of(const FullIntegralOutcome& o);

/// Constant matching on the factored form: P0 = antiderivative with constant 0;
/// a full integral exists iff P0 takes one common value at all multiple roots.
/// f must be nonconstant.
FullIntegralOutcome full_integral(const ExactFactoredPoly& f);

/// Root-free route for dense input: with r the squarefree part of gcd(f, f'),
/// a full integral exists iff P0 mod r is a constant. Used for iterated
/// integrals whose roots are not available in closed form.
FullIntegralOutcome full_integral(const ExactPoly& f);

/// Root-structure of a dense exact polynomial, computed with gcds.
PolyType classify_type(const ExactPoly& f);

enum class FullIntegralExistence { AlwaysExists, NeverExists, DependsOnValues };

/// What the (simple, multiple) root counts alone say about existence.
FullIntegralExistence full_integral_alternative(int simple, int multiple);

/// The linear map g -> (Q g)' / q from polynomials of degree <= degree_bound
/// to polynomials of degree <= degree_bound + m - 1, where
/// q = prod (x - b_i)^alpha_i and Q = q * prod (x - b_i).
struct PhiMap {
    int degree_bound = 0;
    int multiple_count = 0;
    ExactPoly q;
    ExactPoly big_q;
    /// (degree_bound + m) x (degree_bound + 1); column j holds (Q x^j)' / q.
    ExactMatrix matrix;
};

/// Requires degree_bound >= 0, at least one root, pairwise distinct roots and
/// multiplicities >= 2; throws ValidationError otherwise.
PhiMap phi_build(int degree_bound, std::span<const RootFactor<ExactComplex>> multiple_roots);

/// The unique g with phi(g) = h, or nullopt when h is outside the image.
/// Requires deg h <= degree_bound + m - 1.
std::optional<ExactPoly> phi_image_membership(const PhiMap& phi, const ExactPoly& h);

/// Longest prefix (at most `depth` entries) of F_1, F_2, ... with F_1 a full
/// integral of f and F_{i+1} a full integral of F_i. Free steps take the
/// zero-constant representative.
std::vector<ExactPoly> integral_sequence(const ExactFactoredPoly& f, int depth);

/// Upper bound on the number of matrices B_1, ..., B_l in a chain of
/// successive integrals starting from a diagonalizable matrix of type
/// (simple, multiple): floor(1 + simple / (multiple - 1)). nullopt means
/// unbounded (multiple <= 1).
std::optional<int> sequence_length_bound(int simple, int multiple);

}  // namespace matintegra
