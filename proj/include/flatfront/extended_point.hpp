// Points of the Riemann sphere: a finite value (exact Gaussian rational or
// numeric complex, flagged) or the point at infinity.
#pragma once

#include "flatfront/gaussian.hpp"

#include <complex>
#include <string>
#include <vector>

namespace flatfront {

class ExtendedPoint {
public:
    static ExtendedPoint infinity()
    {
        ExtendedPoint p;
        p.kind_ = Kind::Inf;
        return p;
    }
    static ExtendedPoint exact(GaussianRational v)
    {
        ExtendedPoint p;
        p.kind_ = Kind::Exact;
        p.exact_ = std::move(v);
        return p;
    }
    static ExtendedPoint numeric(std::complex<double> v)
    {
        ExtendedPoint p;
        p.kind_ = Kind::Numeric;
        p.num_ = v;
        return p;
    }

    bool is_infinity() const { return kind_ == Kind::Inf; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_numeric() const { return kind_ == Kind::Numeric; }
    bool is_finite() const { return kind_ != Kind::Inf; }

    const GaussianRational& exact_value() const;
    // Finite points only.
    std::complex<double> to_complex() const;

    // Same sphere point up to tol for numeric comparisons (infinity matches
    // only infinity; exact-exact compares exactly).
    bool matches(const ExtendedPoint& other, double tol) const;

    std::string to_string() const;

    // Deterministic ordering for report output: finite points by (re, im),
    // infinity last.
    static bool order_before(const ExtendedPoint& a, const ExtendedPoint& b);

private:
    enum class Kind { Exact, Numeric, Inf };
    Kind kind_ = Kind::Exact;
    GaussianRational exact_;
    std::complex<double> num_{0.0, 0.0};
};

// Membership with tolerance.
bool point_in_set(const ExtendedPoint& p, const std::vector<ExtendedPoint>& set, double tol);

}  // namespace flatfront
