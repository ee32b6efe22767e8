// Meromorphic-map analysis on the Riemann sphere: extended evaluation,
// local orders, covering degree, residues of rational 1-forms, critical
// divisors, preimage fibers.
#pragma once

#include "flatfront/extended_point.hpp"
#include "flatfront/rational_map.hpp"

#include <optional>
#include <vector>

namespace flatfront {

// Exact-or-numeric finite scalar (residues, map values at points, ...).
struct HybridScalar {
    bool exact = true;
    GaussianRational exact_value;
    std::complex<double> approx{0.0, 0.0};

    static HybridScalar of(GaussianRational v)
    {
        HybridScalar s;
        s.exact = true;
        s.approx = v.to_complex();
        s.exact_value = std::move(v);
        return s;
    }
    static HybridScalar of(std::complex<double> v)
    {
        HybridScalar s;
        s.exact = false;
        s.approx = v;
        return s;
    }
    bool is_real(double tol) const
    {
        return exact ? exact_value.is_real() : std::abs(approx.imag()) <= tol;
    }
    std::string to_string() const;
};

struct Divisor {
    struct Entry {
        ExtendedPoint point;
        int order;  // nonzero
    };
    std::vector<Entry> entries;

    // Adds `order` at `point`, merging with an existing entry within tol.
    void add(const ExtendedPoint& point, int order, double tol);
    int total_order() const;
    std::optional<ExtendedPoint> common_support_point(const Divisor& other, double tol) const;
    void sort_entries();
};

// coeff * dz
struct RationalOneForm {
    RationalMap coeff;
};

// Value of a reduced rational map at a sphere point (infinity via w = 1/z).
ExtendedPoint evaluate(const RationalMap& r, const ExtendedPoint& p);

// Vanishing order at p (negative = pole order); weight-free, i.e. plain
// function order even at infinity. R must be nonzero.
int order_at(const RationalMap& r, const ExtendedPoint& p, double tol = 1e-12);

// Covering degree max(deg num, deg den); throws on constants.
int covering_degree(const RationalMap& g);

// Residue of the form at p, including p = infinity.
HybridScalar residue(const RationalOneForm& form, const ExtendedPoint& p, double tol = 1e-12);

// All poles of the form on the sphere (finite poles of the coefficient plus
// infinity when the form has a pole there), each with the form's pole order.
std::vector<std::pair<ExtendedPoint, int>> form_poles(const RationalOneForm& form,
                                                      double tol = 1e-12);

// Branching divisor: point -> (local multiplicity - 1); total = 2 deg - 2.
Divisor critical_divisor(const RationalMap& g, double tol = 1e-12);

// Fiber of g over b with multiplicities (sums to the covering degree).
std::vector<std::pair<ExtendedPoint, int>> preimages(const RationalMap& g,
                                                     const ExtendedPoint& b,
                                                     double tol = 1e-12);

}  // namespace flatfront
