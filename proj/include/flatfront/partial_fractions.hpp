// Partial-fraction decomposition of a reduced rational function. Poles with
// Gaussian-rational locations carry exact principal-part coefficients; the
// rest are numeric.
#pragma once

#include "flatfront/extended_point.hpp"
#include "flatfront/rational_map.hpp"

#include <complex>
#include <vector>

namespace flatfront {

struct PoleTerm {
    ExtendedPoint location;  // finite
    int order;               // >= 1
    bool exact;
    // coeff[k] multiplies (z - location)^-(k+1), k = 0..order-1; the residue
    // is coeff[0]. Exactly one of the two arrays is populated.
    std::vector<GaussianRational> exact_coeff;
    std::vector<std::complex<double>> numeric_coeff;

    GaussianRational exact_residue() const { return exact_coeff.at(0); }
    std::complex<double> residue() const
    {
        return exact ? exact_coeff.at(0).to_complex() : numeric_coeff.at(0);
    }
};

struct PFDecomp {
    Polynomial poly_part;
    std::vector<PoleTerm> poles;

    // Numeric re-summation at a point (for verification / primitives).
    std::complex<double> eval(const std::complex<double>& z) const;
};

PFDecomp partial_fractions(const RationalMap& r, double tol = 1e-12);

}  // namespace flatfront
