#include "flatfront/polynomial.hpp"

#include <stdexcept>

namespace flatfront {

Polynomial::Polynomial(GaussianRational constant)
{
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::monomial(std::size_t k, GaussianRational coeff)
{
    if (coeff.is_zero()) return Polynomial();
    std::vector<GaussianRational> c(k + 1);
    c[k] = std::move(coeff);
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Polynomial::degree() const
{
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const GaussianRational& Polynomial::leading() const
{
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

GaussianRational Polynomial::coeff(std::size_t k) const
{
    return k < c_.size() ? c_[k] : GaussianRational(0);
}

GaussianRational Polynomial::eval(const GaussianRational& z) const
{
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Polynomial::eval(const std::complex<double>& z) const
{
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1) return Polynomial();
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    if (leading().is_one()) return *this;
    GaussianRational inv = GaussianRational(1) / leading();
    return *this * inv;
}

Polynomial Polynomial::shifted(const GaussianRational& a) const
{
    if (a.is_zero() || is_zero()) return *this;
    // Repeated synthetic division by (z - (-a)) accumulates p(z + a).
    std::vector<GaussianRational> work = c_;
    std::vector<GaussianRational> out(c_.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        // Divide work by (u); evaluate at u = 0 picks off Taylor coefficients:
        // synthetic evaluation of work at point a, keeping the quotient.
        GaussianRational rem(0);
        for (std::size_t j = work.size(); j-- > 0;) {
            GaussianRational tmp = work[j] + rem * a;
            rem = tmp;
            work[j] = tmp;  // becomes quotient shifted below
        }
        out[k] = rem;
        // Quotient of the synthetic division is work[1..]; drop constant term.
        work.erase(work.begin());
        if (work.empty()) {
            for (std::size_t j = k + 1; j < out.size(); ++j) out[j] = GaussianRational(0);
            break;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const
{
    std::vector<GaussianRational> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const
{
    std::vector<GaussianRational> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const GaussianRational& s) const
{
    if (s.is_zero()) return Polynomial();
    std::vector<GaussianRational> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * s;
    return Polynomial(std::move(r));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || a.c_.size() < b.c_.size()) {
        q = Polynomial();
        r = a;
        return;
    }
    std::vector<GaussianRational> rem = a.c_;
    std::vector<GaussianRational> quot(a.c_.size() - b.c_.size() + 1);
    const GaussianRational inv_lead = GaussianRational(1) / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        GaussianRational f = rem[k + b.c_.size() - 1] * inv_lead;
        quot[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    q = Polynomial(std::move(quot));
    r = Polynomial(std::move(rem));
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b)
{
    Polynomial q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial Polynomial::pow(unsigned long n) const
{
    Polynomial out = Polynomial::one();
    Polynomial base = *this;
    while (n) {
        if (n & 1UL) out = out * base;
        base = base * base;
        n >>= 1UL;
    }
    return out;
}

int Polynomial::order_at(const GaussianRational& p) const
{
    if (is_zero()) throw std::domain_error("order of the zero polynomial");
    // Count exact divisions by (z - p).
    Polynomial lin(std::vector<GaussianRational>{-p, GaussianRational(1)});
    Polynomial cur = *this;
    int ord = 0;
    while (true) {
        if (!cur.eval(p).is_zero()) return ord;
        cur = div_exact(cur, lin);
        ++ord;
    }
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = gaussian_to_string(c_[k]);
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-') != std::string::npos || cs.find('/') != std::string::npos;
        if (k == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
            continue;
        }
        if (c_[k].is_one())
            out += var;
        else
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();  // keep coefficient growth in check
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p)
{
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<Polynomial> out;
    if (p.is_constant()) return out;
    Polynomial pm = p.monic();
    Polynomial dp = pm.derivative();
    Polynomial g = poly_gcd(pm, dp);
    Polynomial w = Polynomial::div_exact(pm, g);
    Polynomial y = Polynomial::div_exact(dp, g);
    Polynomial z = y - w.derivative();
    while (true) {
        if (z.is_zero()) {
            out.push_back(w.monic());
            break;
        }
        Polynomial gi = poly_gcd(w, z);
        out.push_back(gi.monic());
        w = Polynomial::div_exact(w, gi);
        y = Polynomial::div_exact(z, gi);
        z = y - w.derivative();
        if (w.is_constant() && z.is_zero()) break;
    }
    return out;
}

}  // namespace flatfront
