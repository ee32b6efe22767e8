#include "flatfront/sphere.hpp"

#include "flatfront/numeric_poly.hpp"
#include "flatfront/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace flatfront {

namespace {

CPoly to_cpoly(const Polynomial& p)
{
    CPoly c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_complex();
    return c;
}

// Taylor coefficients s_0..s_{m-1} of num(p+u) / (den(p+u)/u^m), exact case.
std::vector<GaussianRational> local_series_exact(const Polynomial& num, const Polynomial& den,
                                                 const GaussianRational& p, int m)
{
    Polynomial ns = num.shifted(p);
    Polynomial ds = den.shifted(p);
    const std::size_t mm = static_cast<std::size_t>(m);
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
        for (std::size_t j = 0; j <= k; ++j) acc += ns.coeff(j) * inv[k - j];
        s[k] = acc;
    }
    return s;
}

int numeric_multiplicity(const Polynomial& p, std::complex<double> z, double tol)
{
    int count = 0;
    for (const auto& r : poly_roots(p, tol)) {
        if (!r.point.is_infinity() &&
            std::abs(r.point.to_complex() - z) <= std::max(1e-7, 100.0 * tol))
            count += r.multiplicity;
    }
    return count;
}

}  // namespace

std::string HybridScalar::to_string() const
{
    if (exact) return gaussian_to_string(exact_value);
    char buf[80];
    if (approx.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", approx.real());
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g%+.17g*i", approx.real(), approx.imag());
    }
    return buf;
}

void Divisor::add(const ExtendedPoint& point, int order, double tol)
{
    if (order == 0) return;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        if (it->point.matches(point, tol)) {
            it->order += order;
            if (it->order == 0) entries.erase(it);
            return;
        }
    }
    entries.push_back({point, order});
}

int Divisor::total_order() const
{
    int t = 0;
    for (const auto& e : entries) t += e.order;
    return t;
}

std::optional<ExtendedPoint> Divisor::common_support_point(const Divisor& other, double tol) const
{
    for (const auto& a : entries)
        for (const auto& b : other.entries)
            if (a.point.matches(b.point, tol)) return a.point;
    return std::nullopt;
}

void Divisor::sort_entries()
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return ExtendedPoint::order_before(a.point, b.point);
    });
}

ExtendedPoint evaluate(const RationalMap& r, const ExtendedPoint& p)
{
    if (p.is_infinity()) return evaluate(r.reciprocal_substitution(),
                                         ExtendedPoint::exact(GaussianRational(0)));
    if (p.is_exact()) {
        const GaussianRational& z = p.exact_value();
        GaussianRational d = r.den().eval(z);
        if (d.is_zero()) return ExtendedPoint::infinity();
        return ExtendedPoint::exact(r.num().is_zero() ? GaussianRational(0)
                                                      : r.num().eval(z) / d);
    }
    std::complex<double> z = p.to_complex();
    std::complex<double> d = r.den().eval(z);
    if (std::abs(d) == 0.0) return ExtendedPoint::infinity();
    std::complex<double> n = r.num().is_zero() ? 0.0 : r.num().eval(z);
    return ExtendedPoint::numeric(n / d);
}

int order_at(const RationalMap& r, const ExtendedPoint& p, double tol)
{
    if (r.is_zero()) throw std::domain_error("order of the zero map");
    if (p.is_infinity()) {
        int dn = r.num().degree();
        int dd = r.den().degree();
        return dd - dn;
    }
    if (p.is_exact()) {
        const GaussianRational& z = p.exact_value();
        return r.num().order_at(z) - r.den().order_at(z);
    }
    std::complex<double> z = p.to_complex();
    return numeric_multiplicity(r.num(), z, tol) - numeric_multiplicity(r.den(), z, tol);
}

int covering_degree(const RationalMap& g)
{
    if (g.is_constant()) throw std::domain_error("degree of a constant map");
    return g.map_degree();
}

HybridScalar residue(const RationalOneForm& form, const ExtendedPoint& p, double tol)
{
    const RationalMap& r = form.coeff;
    if (r.is_zero()) return HybridScalar::of(GaussianRational(0));
    if (p.is_infinity()) {
        // Pull back under z = 1/w: the form becomes -coeff(1/w)/w^2 dw.
        RationalMap rec = r.reciprocal_substitution();
        RationalMap pulled =
            -(rec / RationalMap(Polynomial::monomial(2), Polynomial::one()));
        return residue({pulled}, ExtendedPoint::exact(GaussianRational(0)), tol);
    }
    if (p.is_exact()) {
        const GaussianRational& z = p.exact_value();
        int m = r.den().order_at(z);
        if (m == 0) return HybridScalar::of(GaussianRational(0));
        auto s = local_series_exact(r.num(), r.den(), z, m);
        return HybridScalar::of(s[static_cast<std::size_t>(m - 1)]);
    }
    // Numeric pole: contour-free local series in doubles.
    std::complex<double> z = p.to_complex();
    int m = numeric_multiplicity(r.den(), z, tol);
    if (m == 0) return HybridScalar::of(GaussianRational(0));
    CPoly nc = to_cpoly(r.num());
    CPoly dc = to_cpoly(r.den());
    // Shift both to z and divide out u^m from the denominator series.
    const std::size_t mm = static_cast<std::size_t>(m);
    auto shift = [](const CPoly& poly, std::complex<double> a) {
        CPoly work = poly;
        CPoly out(poly.size(), {0.0, 0.0});
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
    };
    CPoly ns = shift(nc, z);
    CPoly ds = shift(dc, z);
    std::vector<std::complex<double>> e(mm, 0.0);
    for (std::size_t j = 0; j < mm; ++j) e[j] = (mm + j) < ds.size() ? ds[mm + j] : 0.0;
    std::vector<std::complex<double>> inv(mm, 0.0);
    inv[0] = 1.0 / e[0];
    for (std::size_t k = 1; k < mm; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += e[j] * inv[k - j];
        inv[k] = -acc * inv[0];
    }
    std::complex<double> res = 0.0;
    for (std::size_t j = 0; j < mm; ++j)
        res += (j < ns.size() ? ns[j] : 0.0) * inv[mm - 1 - j];
    return HybridScalar::of(res);
}

std::vector<std::pair<ExtendedPoint, int>> form_poles(const RationalOneForm& form, double tol)
{
    std::vector<std::pair<ExtendedPoint, int>> out;
    const RationalMap& r = form.coeff;
    if (r.is_zero()) return out;
    if (!r.den().is_constant()) {
        for (const auto& root : poly_roots(r.den(), tol))
            out.push_back({root.point, root.multiplicity});
    }
    // At infinity the dz weight shifts the order by 2.
    int ord_inf = order_at(r, ExtendedPoint::infinity(), tol) - 2;
    if (ord_inf < 0) out.push_back({ExtendedPoint::infinity(), -ord_inf});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return ExtendedPoint::order_before(a.first, b.first);
    });
    return out;
}

Divisor critical_divisor(const RationalMap& g, double tol)
{
    if (g.is_constant()) throw std::domain_error("critical divisor of a constant map");
    Divisor div;
    const double merge_tol = std::max(1e-9, 10.0 * tol);

    // Finite points where g takes a finite value with multiplicity >= 2:
    // zeros of the numerator of g'. Reduction guarantees these are disjoint
    // from the poles of g.
    RationalMap dg = g.derivative();
    if (!dg.num().is_zero() && !dg.num().is_constant()) {
        for (const auto& root : poly_roots(dg.num(), tol))
            div.add(root.point, root.multiplicity, merge_tol);
    }
    // Finite poles of order >= 2.
    if (!g.den().is_constant()) {
        for (const auto& root : poly_roots(g.den(), tol))
            if (root.multiplicity >= 2) div.add(root.point, root.multiplicity - 1, merge_tol);
    }
    // Infinity, through the w = 1/z chart.
    RationalMap gw = g.reciprocal_substitution();
    ExtendedPoint zero = ExtendedPoint::exact(GaussianRational(0));
    ExtendedPoint v = evaluate(gw, zero);
    int mult;
    if (v.is_infinity()) {
        mult = -order_at(gw, zero, tol);
    } else {
        RationalMap shifted = gw - RationalMap::constant(v.exact_value());
        mult = order_at(shifted, zero, tol);
    }
    if (mult >= 2) div.add(ExtendedPoint::infinity(), mult - 1, merge_tol);
    div.sort_entries();
    return div;
}

std::vector<std::pair<ExtendedPoint, int>> preimages(const RationalMap& g,
                                                     const ExtendedPoint& b, double tol)
{
    int d = covering_degree(g);
    std::vector<std::pair<ExtendedPoint, int>> out;
    if (b.is_infinity()) {
        if (!g.den().is_constant())
            for (const auto& root : poly_roots(g.den(), tol))
                out.push_back({root.point, root.multiplicity});
        int extra = g.num().degree() - g.den().degree();
        if (extra > 0) out.push_back({ExtendedPoint::infinity(), extra});
        return out;
    }
    if (b.is_exact()) {
        Polynomial p = g.num() - g.den() * b.exact_value();
        if (p.is_zero()) throw std::logic_error("constant map slipped into preimages");
        if (!p.is_constant())
            for (const auto& root : poly_roots(p, tol))
                out.push_back({root.point, root.multiplicity});
        int extra = d - (p.is_constant() ? 0 : p.degree());
        if (extra > 0) out.push_back({ExtendedPoint::infinity(), extra});
        return out;
    }
    // Numeric value: double-precision fiber.
    CPoly nc = to_cpoly(g.num());
    CPoly dc = to_cpoly(g.den());
    CPoly scaled(dc.size());
    for (std::size_t k = 0; k < dc.size(); ++k) scaled[k] = dc[k] * b.to_complex();
    CPoly p = cpoly_sub(nc, scaled);
    cpoly_trim(p, 1e-11);
    int eff_deg = p.empty() ? 0 : static_cast<int>(p.size()) - 1;
    if (eff_deg > 0) {
        auto clustered = cluster_roots(durand_kerner(p), 1e-5);
        for (const auto& c : clustered)
            out.push_back({ExtendedPoint::numeric(c.value), c.multiplicity});
    }
    int extra = d - eff_deg;
    if (extra > 0) out.push_back({ExtendedPoint::infinity(), extra});
    return out;
}

}  // namespace flatfront
