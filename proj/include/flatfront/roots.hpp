// Hybrid exact/numeric root finding: exact Yun squarefree split, exact
// extraction of Gaussian-rational roots (numerically located, exactly
// verified, exactly deflated), Durand-Kerner + Newton for the rest.
#pragma once

#include "flatfront/extended_point.hpp"
#include "flatfront/polynomial.hpp"

#include <vector>

namespace flatfront {

struct RootRecord {
    ExtendedPoint point;  // exact or numeric, never infinity
    int multiplicity;
};

inline constexpr double kDefaultRootTol = 1e-12;

// Roots with multiplicities summing to deg(p); p must be nonzero. Numeric
// roots within 10*tol of each other are merged.
std::vector<RootRecord> poly_roots(const Polynomial& p, double tol = kDefaultRootTol);

// Convenience: the distinct root points only.
std::vector<ExtendedPoint> poly_root_points(const Polynomial& p, double tol = kDefaultRootTol);

}  // namespace flatfront
