#include "flatfront/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace flatfront {

Rational rational_from_string(const std::string& text)
{
    try {
        Rational r(text);
        if (r.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational literal '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r)
{
    return r.get_str();
}

double rational_to_double(const Rational& r)
{
    return r.get_d();
}

bool rational_is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

Rational rational_pow(const Rational& r, long n)
{
    if (n == 0) return Rational(1);
    if (r == 0 && n < 0) throw std::domain_error("0 raised to a negative power");
    Rational base = n > 0 ? r : Rational(1) / r;
    unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
    Rational out(1);
    while (e) {
        if (e & 1UL) out *= base;
        base *= base;
        e >>= 1UL;
    }
    return out;
}

std::optional<Rational> reconstruct_rational(double x, unsigned long max_den)
{
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents of x.
    double v = x;
    mpz_class p_prev(1), q_prev(0);   // h_{-1}, k_{-1}
    mpz_class p(0), q(1);             // seeded so the first step yields h_0 = a_0, k_0 = 1
    {
        double a0 = std::floor(v);
        p = mpz_class(a0);
        q = 1;
        v -= a0;
    }
    const double scale = std::max(1.0, std::fabs(x));
    for (int iter = 0; iter < 64; ++iter) {
        Rational cand(p, q);
        cand.canonicalize();
        double err = std::fabs(cand.get_d() - x);
        if (err <= 1e-12 * scale) return cand;
        if (v == 0.0) break;
        v = 1.0 / v;
        if (!std::isfinite(v) || std::fabs(v) > 1e18) break;
        double a = std::floor(v);
        v -= a;
        mpz_class ai(a);
        mpz_class p_next = ai * p + p_prev;
        mpz_class q_next = ai * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        if (q > mpz_class(max_den)) break;
    }
    Rational cand(p, q);
    cand.canonicalize();
    if (cand.get_den() <= mpz_class(max_den) &&
        std::fabs(cand.get_d() - x) <= 1e-12 * scale)
        return cand;
    return std::nullopt;
}

}  // namespace flatfront
