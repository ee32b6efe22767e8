#include "flatfront/roots.hpp"

#include "flatfront/numeric_poly.hpp"

#include <algorithm>
#include <cmath>

namespace flatfront {

namespace {

CPoly to_cpoly(const Polynomial& p)
{
    CPoly c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_complex();
    return c;
}

// Attempt to promote a numeric root of `f` to an exact Gaussian-rational one.
std::optional<GaussianRational> promote_root(const Polynomial& f, std::complex<double> z)
{
    auto re = reconstruct_rational(z.real());
    auto im = reconstruct_rational(z.imag());
    if (!re || !im) return std::nullopt;
    GaussianRational cand(*re, *im);
    if (f.eval(cand).is_zero()) return cand;
    return std::nullopt;
}

}  // namespace

std::vector<RootRecord> poly_roots(const Polynomial& p, double tol)
{
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<RootRecord> out;
    if (p.is_constant()) return out;

    std::vector<Polynomial> factors = squarefree_decomposition(p);
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const int mult = static_cast<int>(idx) + 1;
        Polynomial f = factors[idx];
        if (f.is_constant()) continue;

        // Exact part.
        std::vector<GaussianRational> exact_roots;
        while (!f.is_constant()) {
            if (f.degree() == 1) {
                exact_roots.push_back(-f.coeff(0) / f.coeff(1));
                f = Polynomial::one();
                break;
            }
            std::vector<std::complex<double>> numeric = durand_kerner(to_cpoly(f));
            bool progressed = false;
            for (const auto& z : numeric) {
                if (auto cand = promote_root(f, z)) {
                    exact_roots.push_back(*cand);
                    Polynomial lin(std::vector<GaussianRational>{-*cand, GaussianRational(1)});
                    f = Polynomial::div_exact(f, lin);
                    progressed = true;
                    break;  // deflated; recompute numeric roots of the smaller factor
                }
            }
            if (!progressed) break;
        }
        for (auto& r : exact_roots) out.push_back({ExtendedPoint::exact(std::move(r)), mult});

        // Numeric remainder: simple roots of a squarefree factor.
        if (!f.is_constant()) {
            CPoly cf = to_cpoly(f);
            CPoly cdf = cpoly_derivative(cf);
            for (auto z : durand_kerner(cf)) {
                z = newton_polish(cf, cdf, z);
                out.push_back({ExtendedPoint::numeric(z), mult});
            }
        }
    }

    // Merge numeric near-duplicates (deterministic clustering radius).
    const double merge_radius = 10.0 * tol;
    std::vector<RootRecord> merged;
    for (auto& r : out) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (m.point.is_exact() && r.point.is_exact()) {
                if (m.point.exact_value() == r.point.exact_value()) {
                    m.multiplicity += r.multiplicity;
                    absorbed = true;
                    break;
                }
            } else if (!(m.point.is_exact() && r.point.is_exact()) &&
                       std::abs(m.point.to_complex() - r.point.to_complex()) <= merge_radius) {
                m.multiplicity += r.multiplicity;
                if (r.point.is_exact()) m.point = r.point;  // prefer the exact representative
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(std::move(r));
    }
    std::sort(merged.begin(), merged.end(), [](const RootRecord& a, const RootRecord& b) {
        return ExtendedPoint::order_before(a.point, b.point);
    });
    return merged;
}

std::vector<ExtendedPoint> poly_root_points(const Polynomial& p, double tol)
{
    std::vector<ExtendedPoint> pts;
    for (auto& r : poly_roots(p, tol)) pts.push_back(r.point);
    return pts;
}

}  // namespace flatfront
