#include "flatfront/partial_fractions.hpp"

#include "flatfront/numeric_poly.hpp"
#include "flatfront/roots.hpp"

#include <cmath>

namespace flatfront {

namespace {

// Exact Taylor coefficients s_0..s_{m-1} of N(p+u)/E(p+u) where
// E(p+u) = D(p+u)/u^m.
std::vector<GaussianRational> exact_series(const Polynomial& num, const Polynomial& den,
                                           const GaussianRational& p, int m)
{
    Polynomial ns = num.shifted(p);
    Polynomial ds = den.shifted(p);
    const std::size_t mm = static_cast<std::size_t>(m);
    // E series: the first m coefficients of the shifted denominator vanish.
    std::vector<GaussianRational> e(mm);
    for (std::size_t j = 0; j < mm; ++j) e[j] = ds.coeff(mm + j);
    std::vector<GaussianRational> inv(mm);
    inv[0] = GaussianRational(1) / e[0];
    for (std::size_t k = 1; k < mm; ++k) {
        GaussianRational acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += e[j] * inv[k - j];
        inv[k] = -acc * inv[0];
    }
    std::vector<GaussianRational> s(mm);
    for (std::size_t k = 0; k < mm; ++k) {
        GaussianRational acc(0);
        for (std::size_t j = 0; j <= k; ++j) acc += num.is_zero() ? GaussianRational(0)
                                                                  : ns.coeff(j) * inv[k - j];
        s[k] = acc;
    }
    return s;
}

CPoly cpoly_shift(const CPoly& p, std::complex<double> a)
{
    CPoly work = p;
    CPoly out(p.size(), {0.0, 0.0});
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::complex<double> rem = 0.0;
        for (std::size_t j = work.size(); j-- > 0;) {
            rem = work[j] + rem * a;
            work[j] = rem;
        }
        out[k] = rem;
        work.erase(work.begin());
        if (work.empty()) break;
    }
    return out;
}

std::vector<std::complex<double>> numeric_series(const CPoly& num, const CPoly& den,
                                                 std::complex<double> p, int m)
{
    CPoly ns = cpoly_shift(num, p);
    CPoly ds = cpoly_shift(den, p);
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<std::complex<double>> e(mm, 0.0);
    for (std::size_t j = 0; j < mm; ++j) e[j] = (mm + j) < ds.size() ? ds[mm + j] : 0.0;
    std::vector<std::complex<double>> inv(mm, 0.0);
    inv[0] = 1.0 / e[0];
    for (std::size_t k = 1; k < mm; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += e[j] * inv[k - j];
        inv[k] = -acc * inv[0];
    }
    std::vector<std::complex<double>> s(mm, 0.0);
    for (std::size_t k = 0; k < mm; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += (j < ns.size() ? ns[j] : 0.0) * inv[k - j];
        s[k] = acc;
    }
    return s;
}

CPoly to_cpoly(const Polynomial& p)
{
    CPoly c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_complex();
    return c;
}

}  // namespace

std::complex<double> PFDecomp::eval(const std::complex<double>& z) const
{
    std::complex<double> acc = poly_part.is_zero() ? 0.0 : poly_part.eval(z);
    for (const auto& t : poles) {
        std::complex<double> d = z - t.location.to_complex();
        std::complex<double> dk = d;
        for (int k = 0; k < t.order; ++k) {
            std::complex<double> c = t.exact ? t.exact_coeff[static_cast<std::size_t>(k)].to_complex()
                                             : t.numeric_coeff[static_cast<std::size_t>(k)];
            acc += c / dk;
            dk *= d;
        }
    }
    return acc;
}

PFDecomp partial_fractions(const RationalMap& r, double tol)
{
    if (tol <= 0) throw std::domain_error("partial fractions requires a positive tolerance");
    PFDecomp out;
    Polynomial q, rem;
    Polynomial::divmod(r.num(), r.den(), q, rem);
    out.poly_part = q;
    if (rem.is_zero()) return out;

    for (const auto& root : poly_roots(r.den(), tol)) {
        PoleTerm term;
        term.location = root.point;
        term.order = root.multiplicity;
        term.exact = root.point.is_exact();
        if (term.exact) {
            auto s = exact_series(rem, r.den(), root.point.exact_value(), root.multiplicity);
            // coefficient of (z-p)^-k is s_{m-k}
            term.exact_coeff.resize(s.size());
            for (std::size_t k = 0; k < s.size(); ++k)
                term.exact_coeff[k] = s[s.size() - 1 - k];
        } else {
            auto s = numeric_series(to_cpoly(rem), to_cpoly(r.den()), root.point.to_complex(),
                                    root.multiplicity);
            term.numeric_coeff.resize(s.size());
            for (std::size_t k = 0; k < s.size(); ++k)
                term.numeric_coeff[k] = s[s.size() - 1 - k];
        }
        out.poles.push_back(std::move(term));
    }
    return out;
}

}  // namespace flatfront
