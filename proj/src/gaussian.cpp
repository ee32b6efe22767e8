#include "flatfront/gaussian.hpp"

namespace flatfront {

GaussianRational gaussian_pow(const GaussianRational& z, long n)
{
    if (n == 0) return GaussianRational(1);
    if (z.is_zero() && n < 0) throw std::domain_error("0 raised to a negative power");
    GaussianRational base = n > 0 ? z : GaussianRational(1) / z;
    unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
    GaussianRational out(1);
    while (e) {
        if (e & 1UL) out *= base;
        base *= base;
        e >>= 1UL;
    }
    return out;
}

std::string gaussian_to_string(const GaussianRational& z)
{
    if (z.is_real()) return rational_to_string(z.re);
    std::string out;
    if (z.re != 0) out += rational_to_string(z.re);
    if (z.im > 0 && !out.empty()) out += "+";
    if (z.im == 1)
        out += "i";
    else if (z.im == -1)
        out += "-i";
    else
        out += rational_to_string(z.im) + "*i";
    return out;
}

}  // namespace flatfront
