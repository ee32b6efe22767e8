// Shared helpers for the test suites: deterministic generators and the
// independent numeric oracles the expected values are frozen against.
#pragma once

#include "flatfront/expr.hpp"
#include "flatfront/rational_map.hpp"

#include <complex>
#include <random>

namespace testutil {

using flatfront::GaussianRational;
using flatfront::ParamBindings;
using flatfront::Polynomial;
using flatfront::Rational;
using flatfront::RationalMap;

inline RationalMap rm(const std::string& text, const ParamBindings& bindings = {})
{
    return *flatfront::parse_function(text, bindings).rational;
}

inline GaussianRational gr(long re_num, long re_den = 1, long im_num = 0, long im_den = 1)
{
    return GaussianRational(flatfront::rational_of(re_num, re_den),
                            flatfront::rational_of(im_num, im_den));
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(unsigned seed) : engine(seed) {}

    long integer(long lo, long hi)
    {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine);
    }
    double real(double lo, double hi)
    {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(engine);
    }
    Rational rational(long max_num = 6, long max_den = 4)
    {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return flatfront::rational_of(num, den);
    }
    GaussianRational gaussian(bool allow_imag = true)
    {
        Rational re = rational();
        Rational im = allow_imag && integer(0, 2) == 0 ? rational() : Rational(0);
        return GaussianRational(re, im);
    }
    Polynomial polynomial(int max_degree, bool allow_imag = true)
    {
        int deg = static_cast<int>(integer(0, max_degree));
        std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = gaussian(allow_imag);
        if (c.back().is_zero()) c.back() = GaussianRational(1);
        return Polynomial(std::move(c));
    }
    Polynomial nonzero_polynomial(int max_degree, bool allow_imag = true)
    {
        Polynomial p = polynomial(max_degree, allow_imag);
        while (p.is_zero()) p = polynomial(max_degree, allow_imag);
        return p;
    }
    RationalMap rational_map(int max_degree, bool allow_imag = true)
    {
        Polynomial num = polynomial(max_degree, allow_imag);
        Polynomial den = nonzero_polynomial(max_degree, allow_imag);
        RationalMap r(num, den);
        return r;
    }
    std::complex<double> point(double radius = 3.0)
    {
        return {real(-radius, radius), real(-radius, radius)};
    }
};

// Central finite difference, the derivative oracle.
inline std::complex<double> fd_derivative(const RationalMap& r, std::complex<double> z,
                                          double h = 1e-5)
{
    return (r.eval(z + h) - r.eval(z - h)) / (2.0 * h);
}

}  // namespace testutil
