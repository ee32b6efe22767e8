// Exact rational scalars on top of GMP, plus the few numeric bridges
// (double conversion, continued-fraction reconstruction) the hybrid
// exact/numeric pipeline needs.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace flatfront {

using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" (decimal digits).
Rational rational_from_string(const std::string& text);

// "p" or "p/q", canonical form (q > 0, coprime).
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

bool rational_is_integer(const Rational& r);

// r^n for possibly negative n; throws on 0^negative.
Rational rational_pow(const Rational& r, long n);

// Nearest rational p/q with q <= max_den whose value matches x to ~1e-12
// relative accuracy; nullopt when no convergent qualifies. Used to promote
// numerically located roots back to exact candidates.
std::optional<Rational> reconstruct_rational(double x, unsigned long max_den = 1000000000UL);

}  // namespace flatfront
