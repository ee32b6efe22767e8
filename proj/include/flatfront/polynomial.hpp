// Dense univariate polynomials over the Gaussian rationals.
#pragma once

#include "flatfront/gaussian.hpp"

#include <complex>
#include <string>
#include <vector>

namespace flatfront {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(GaussianRational constant);
    explicit Polynomial(std::vector<GaussianRational> coeffs);  // coeffs[k] multiplies z^k

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(GaussianRational(1)); }
    // z^k (k >= 0)
    static Polynomial monomial(std::size_t k, GaussianRational coeff = GaussianRational(1));

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Degree of a nonzero polynomial. The zero polynomial has no degree;
    // callers must branch on is_zero() first.
    int degree() const;

    const GaussianRational& leading() const;
    GaussianRational coeff(std::size_t k) const;  // 0 beyond the stored range
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    GaussianRational eval(const GaussianRational& z) const;
    std::complex<double> eval(const std::complex<double>& z) const;

    Polynomial derivative() const;
    Polynomial monic() const;  // leading coefficient scaled to 1
    // p(z + a): Taylor shift.
    Polynomial shifted(const GaussianRational& a) const;
    // z^deg * p(1/z): coefficient reversal (zero polynomial maps to itself).
    Polynomial reversed() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const GaussianRational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a.c_ == b.c_); }

    // Euclidean division; throws on zero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    // Exact quotient; throws if the remainder is nonzero.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned long n) const;

    // Vanishing order at an exact point (0 for nonroots); requires nonzero.
    int order_at(const GaussianRational& p) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

// Monic gcd over the field of Gaussian rationals; gcd(0, p) = monic p.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Yun squarefree decomposition: returns factors f_1, f_2, ... such that
// p = lc * prod f_i^i with the f_i squarefree and pairwise coprime (entries
// may be constant 1 and are monic).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace flatfront
