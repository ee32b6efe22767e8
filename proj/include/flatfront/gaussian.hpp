// Gaussian rationals: exact complex scalars a + b*i with rational a, b.
// The coefficient field for every polynomial in the engine.
#pragma once

#include "flatfront/rational.hpp"

#include <complex>
#include <string>

namespace flatfront {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2 as an exact rational.
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const
    {
        return {rational_to_double(re), rational_to_double(im)};
    }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
    {
        if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        Rational n = b.norm2();
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b)
    {
        return !(a == b);
    }
};

GaussianRational gaussian_pow(const GaussianRational& z, long n);

// "p/q" for real values, "a+b*i" / "a-b*i" otherwise; parseable by the
// expression grammar.
std::string gaussian_to_string(const GaussianRational& z);

}  // namespace flatfront
