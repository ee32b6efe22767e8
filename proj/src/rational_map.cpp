#include "flatfront/rational_map.hpp"

#include <stdexcept>

namespace flatfront {

RationalMap::RationalMap(Polynomial num, Polynomial den)
{
    if (den.is_zero()) throw std::domain_error("rational map with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = Polynomial::div_exact(num, g);
        den = Polynomial::div_exact(den, g);
    }
    GaussianRational lead = den.leading();
    if (!lead.is_one()) {
        GaussianRational inv = GaussianRational(1) / lead;
        num = num * inv;
        den = den * inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalMap RationalMap::identity()
{
    return RationalMap(Polynomial::monomial(1), Polynomial::one());
}

int RationalMap::map_degree() const
{
    if (is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

RationalMap RationalMap::operator-() const
{
    RationalMap r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalMap operator+(const RationalMap& a, const RationalMap& b)
{
    return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalMap operator-(const RationalMap& a, const RationalMap& b)
{
    return RationalMap(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalMap operator*(const RationalMap& a, const RationalMap& b)
{
    return RationalMap(a.num_ * b.num_, a.den_ * b.den_);
}

RationalMap operator/(const RationalMap& a, const RationalMap& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero rational map");
    return RationalMap(a.num_ * b.den_, a.den_ * b.num_);
}

RationalMap RationalMap::operator*(const GaussianRational& s) const
{
    return RationalMap(num_ * s, den_);
}

RationalMap RationalMap::derivative() const
{
    return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalMap RationalMap::reciprocal() const
{
    if (is_zero()) throw std::domain_error("reciprocal of the zero map");
    return RationalMap(den_, num_);
}

RationalMap RationalMap::reciprocal_substitution() const
{
    if (is_zero()) return *this;
    int n = num_.degree();
    int d = den_.degree();
    Polynomial rn = num_.reversed();
    Polynomial rd = den_.reversed();
    // R(1/w) = w^(d-n) * rev(num)(w) / rev(den)(w)
    if (d >= n)
        return RationalMap(Polynomial::monomial(static_cast<std::size_t>(d - n)) * rn, rd);
    return RationalMap(rn, Polynomial::monomial(static_cast<std::size_t>(n - d)) * rd);
}

RationalMap RationalMap::compose_mobius(const GaussianRational& a, const GaussianRational& b,
                                        const GaussianRational& c, const GaussianRational& d) const
{
    if ((a * d - b * c).is_zero()) throw std::domain_error("singular Mobius substitution");
    if (is_zero()) return *this;
    Polynomial up(std::vector<GaussianRational>{b, a});    // a*z + b
    Polynomial dn(std::vector<GaussianRational>{d, c});    // c*z + d
    int n = num_.degree();
    int m = den_.degree();
    int deg = std::max(n, m);
    auto homog = [&](const Polynomial& p, int raise_to) {
        // sum_k p_k * up^k * dn^(raise_to - k)
        Polynomial acc;
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(static_cast<std::size_t>(k)).is_zero()) continue;
            Polynomial term = up.pow(static_cast<unsigned long>(k)) *
                              dn.pow(static_cast<unsigned long>(raise_to - k));
            acc = acc + term * p.coeff(static_cast<std::size_t>(k));
        }
        return acc;
    };
    return RationalMap(homog(num_, deg), homog(den_, deg));
}

std::complex<double> RationalMap::eval(const std::complex<double>& z) const
{
    return num_.eval(z) / den_.eval(z);
}

RationalMap RationalMap::pow(long n) const
{
    if (n == 0) return RationalMap(GaussianRational(1));
    RationalMap base = n > 0 ? *this : reciprocal();
    unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
    RationalMap out(GaussianRational(1));
    while (e) {
        if (e & 1UL) out = out * base;
        base = base * base;
        e >>= 1UL;
    }
    return out;
}

std::string RationalMap::to_string(const std::string& var) const
{
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace flatfront
