#include "flatfront/extended_point.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace flatfront {

const GaussianRational& ExtendedPoint::exact_value() const
{
    if (kind_ != Kind::Exact) throw std::logic_error("not an exact point");
    return exact_;
}

std::complex<double> ExtendedPoint::to_complex() const
{
    switch (kind_) {
        case Kind::Exact: return exact_.to_complex();
        case Kind::Numeric: return num_;
        default: throw std::logic_error("infinity has no complex value");
    }
}

bool ExtendedPoint::matches(const ExtendedPoint& other, double tol) const
{
    if (is_infinity() || other.is_infinity()) return is_infinity() && other.is_infinity();
    if (is_exact() && other.is_exact()) return exact_ == other.exact_;
    return std::abs(to_complex() - other.to_complex()) <= tol;
}

std::string ExtendedPoint::to_string() const
{
    switch (kind_) {
        case Kind::Inf: return "inf";
        case Kind::Exact: return gaussian_to_string(exact_);
        default: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g%+.17g*i", num_.real(), num_.imag());
            return buf;
        }
    }
}

bool ExtendedPoint::order_before(const ExtendedPoint& a, const ExtendedPoint& b)
{
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    std::complex<double> za = a.to_complex();
    std::complex<double> zb = b.to_complex();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
}

bool point_in_set(const ExtendedPoint& p, const std::vector<ExtendedPoint>& set, double tol)
{
    for (const auto& q : set)
        if (p.matches(q, tol)) return true;
    return false;
}

}  // namespace flatfront
