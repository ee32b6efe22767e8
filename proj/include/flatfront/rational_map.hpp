// Reduced rational functions: coprime numerator/denominator, monic
// denominator. Values of Gauss maps and coefficients of 1-forms live here.
#pragma once

#include "flatfront/polynomial.hpp"

namespace flatfront {

class RationalMap {
public:
    RationalMap() : num_(), den_(Polynomial::one()) {}  // the zero map
    // Reduces num/den; throws on zero denominator.
    RationalMap(Polynomial num, Polynomial den);
    explicit RationalMap(GaussianRational constant)
        : RationalMap(Polynomial(std::move(constant)), Polynomial::one())
    {
    }

    static RationalMap identity();  // z
    static RationalMap constant(GaussianRational c) { return RationalMap(std::move(c)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == Polynomial::one(); }

    // max(deg num, deg den); 0 for constants (callers needing the covering
    // degree must reject constants themselves).
    int map_degree() const;

    RationalMap operator-() const;
    friend RationalMap operator+(const RationalMap& a, const RationalMap& b);
    friend RationalMap operator-(const RationalMap& a, const RationalMap& b);
    friend RationalMap operator*(const RationalMap& a, const RationalMap& b);
    friend RationalMap operator/(const RationalMap& a, const RationalMap& b);
    RationalMap operator*(const GaussianRational& s) const;
    friend bool operator==(const RationalMap& a, const RationalMap& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

    // Quotient-rule derivative, reduced.
    RationalMap derivative() const;
    RationalMap reciprocal() const;  // 1/R

    // R(1/w) as a reduced rational map in w.
    RationalMap reciprocal_substitution() const;
    // R((a*z+b)/(c*z+d)); the Mobius matrix need not be normalized but must
    // be nonsingular.
    RationalMap compose_mobius(const GaussianRational& a, const GaussianRational& b,
                               const GaussianRational& c, const GaussianRational& d) const;

    std::complex<double> eval(const std::complex<double>& z) const;

    RationalMap pow(long n) const;

    std::string to_string(const std::string& var = "z") const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace flatfront
