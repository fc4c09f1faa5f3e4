#pragma once

#include <stdexcept>
#include <vector>

#include "matintegra/polynomial.hpp"

namespace matintegra {

class RootFindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ApproxRoot {
    ApproxComplex value;
    int multiplicity = 1;
};

struct RootFinderOptions {
    int max_sweeps = 200;
    /// Roots closer than this (relative to max(1, |r|)) are one root.
    double cluster_tolerance = kRootClusterTolerance;
    /// Required relative coefficient agreement between the input and the
    /// polynomial rebuilt from the returned roots.
    double reconstruction_tolerance = 1e-8;
};

/// All roots of a nonconstant polynomial with multiplicities, by Aberth-Ehrlich
/// simultaneous iteration. Exact zero roots (vanishing low coefficients) are
/// split off before iterating. Nearby approximations are merged into multiple
/// roots when the merge keeps the factorization consistent with p.
///
/// Throws RootFindingError when the iteration does not settle within
/// max_sweeps or the result does not reproduce p to reconstruction_tolerance,
/// and std::invalid_argument for constant or non-finite input.
std::vector<ApproxRoot> find_roots(const ApproxPoly& p, const RootFinderOptions& options = {});

/// The multiset of roots expanded into a flat list.
std::vector<ApproxComplex> flatten(const std::vector<ApproxRoot>& roots);

/// leading * prod (x - r)^mult
ApproxPoly rebuild(const ApproxComplex& leading, const std::vector<ApproxRoot>& roots);

}  // namespace matintegra
