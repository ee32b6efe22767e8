#include "flatfront/front.hpp"

#include "flatfront/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace flatfront {

namespace {

const std::complex<double> kGaugeProbes[] = {
    {0.3727, 0.2193},  {1.1311, -0.4177}, {-0.6823, 0.9151}, {2.2171, 1.0103},
    {-1.8311, -1.3457}, {0.1234, 2.7001},  {3.5017, 0.7711},  {-2.9113, -0.3137},
};

bool extended_values_agree(const ExtendedPoint& a, const ExtendedPoint& b)
{
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    if (a.is_exact() && b.is_exact()) return a.exact_value() == b.exact_value();
    return std::abs(a.to_complex() - b.to_complex()) <= 1e-9;
}

}  // namespace

HermitianPoint HermitianPoint::congruence(const std::array<std::complex<double>, 4>& m) const
{
    const std::complex<double> a = m[0], b = m[1], c = m[2], d = m[3];
    const std::complex<double> h21 = std::conj(h12);
    // rows of m*X
    const std::complex<double> r1l = a * h11 + b * h21, r1r = a * h12 + b * h22;
    const std::complex<double> r2l = c * h11 + d * h21, r2r = c * h12 + d * h22;
    HermitianPoint out;
    out.h11 = (r1l * std::conj(a) + r1r * std::conj(b)).real();
    out.h12 = r1l * std::conj(c) + r1r * std::conj(d);
    out.h22 = (r2l * std::conj(c) + r2r * std::conj(d)).real();
    return out;
}

FrontSpec::FrontSpec(RationalMap gauss, RationalMap gauss_star, double scale,
                     std::vector<ExtendedPoint> extra_ends)
    : gauss_(std::move(gauss)), gauss_star_(std::move(gauss_star)), scale_(scale)
{
    if (scale_ <= 0.0 || !std::isfinite(scale_))
        throw std::domain_error("scale |c| must be a positive real");
    if (gauss_ == gauss_star_)
        throw std::domain_error("the two Gauss maps are identical (G == G*)");
    if (gauss_.is_constant() && gauss_star_.is_constant())
        throw std::domain_error("both Gauss maps are constant; no such front exists");
    ends_ = infer_ends(gauss_, gauss_star_);
    for (const auto& p : extra_ends)
        if (!point_in_set(p, ends_, 1e-9)) ends_.push_back(p);
    std::sort(ends_.begin(), ends_.end(), ExtendedPoint::order_before);
}

std::vector<ExtendedPoint> infer_ends(const RationalMap& gauss, const RationalMap& gauss_star,
                                      double tol)
{
    RationalMap diff = gauss - gauss_star;
    if (diff.is_zero()) throw std::domain_error("G == G*: the maps agree everywhere");
    std::vector<ExtendedPoint> ends;
    if (!diff.num().is_constant())
        for (const auto& r : poly_roots(diff.num(), tol)) ends.push_back(r.point);
    // Common poles: both maps take the value infinity there.
    Polynomial common = poly_gcd(gauss.den(), gauss_star.den());
    if (!common.is_constant())
        for (const auto& r : poly_roots(common, tol))
            if (!point_in_set(r.point, ends, 10.0 * tol)) ends.push_back(r.point);
    if (extended_values_agree(evaluate(gauss, ExtendedPoint::infinity()),
                              evaluate(gauss_star, ExtendedPoint::infinity())))
        ends.push_back(ExtendedPoint::infinity());
    std::sort(ends.begin(), ends.end(), ExtendedPoint::order_before);
    return ends;
}

FrontConditionResult front_condition(const RationalMap& gauss, const RationalMap& gauss_star,
                                     double tol)
{
    FrontConditionResult res;
    if (gauss.is_constant() || gauss_star.is_constant()) {
        res.holds = true;
        res.horosphere = true;
        return res;
    }
    Divisor bg = critical_divisor(gauss, tol);
    Divisor bgs = critical_divisor(gauss_star, tol);
    auto witness = bg.common_support_point(bgs, std::max(1e-9, 10.0 * tol));
    res.holds = !witness.has_value();
    res.witness = witness;
    return res;
}

PeriodReport period_check(const RationalMap& gauss, const RationalMap& gauss_star, double tol)
{
    RationalMap diff = gauss - gauss_star;
    if (diff.is_zero()) throw std::domain_error("period check undefined for G == G*");
    RationalOneForm eta{gauss.derivative() / diff};
    PeriodReport report;
    report.verdict = true;
    report.justification =
        "on a punctured sphere every cycle integral of eta equals 2*pi*i times the sum of "
        "enclosed residues, so the integrals are purely imaginary iff every residue is real";
    for (const auto& [point, order] : form_poles(eta, tol)) {
        PeriodPole pp;
        pp.location = point;
        pp.order = order;
        pp.residue_value = residue(eta, point, tol);
        pp.residue_real = pp.residue_value.is_real(kResidueRealityTol);
        report.verdict = report.verdict && pp.residue_real;
        report.poles.push_back(std::move(pp));
    }
    return report;
}

CanonicalData canonical_data(const FrontSpec& spec)
{
    CanonicalData data;
    RationalMap diff = spec.gauss() - spec.gauss_star();
    data.omega_rational = -spec.gauss().derivative();
    data.theta_rational = spec.gauss_star().derivative() / (diff * diff);
    data.hopf = data.omega_rational * data.theta_rational;
    return data;
}

int hopf_order_at(const RationalMap& hopf, const ExtendedPoint& p, double tol)
{
    if (hopf.is_zero()) throw std::domain_error("Hopf differential vanishes identically");
    if (p.is_infinity()) return order_at(hopf, p, tol) - 4;  // dz^2 = dw^2 / w^4
    return order_at(hopf, p, tol);
}

std::vector<EndRecord> classify_ends(const FrontSpec& spec, double tol)
{
    CanonicalData data = canonical_data(spec);
    const bool hopf_zero = data.hopf.is_zero();
    std::vector<EndRecord> records;
    for (const auto& p : spec.ends()) {
        EndRecord rec;
        rec.point = p;
        if (hopf_zero) {
            // Totally umbilic: Q has no pole anywhere.
            rec.ord_hopf = std::numeric_limits<int>::max();
            rec.regular = true;
            rec.complete_pole_criterion = false;
        } else {
            rec.ord_hopf = hopf_order_at(data.hopf, p, tol);
            rec.regular = rec.ord_hopf >= -2;
            rec.complete_pole_criterion = rec.ord_hopf <= -1;
        }
        rec.gauss_value = evaluate(spec.gauss(), p);
        rec.gauss_star_value = evaluate(spec.gauss_star(), p);
        rec.values_agree = extended_values_agree(rec.gauss_value, rec.gauss_star_value);
        records.push_back(std::move(rec));
    }
    return records;
}

OssermanSummary osserman_summary(const FrontSpec& spec)
{
    OssermanSummary s;
    s.gauss_constant = spec.gauss().is_constant();
    s.gauss_star_constant = spec.gauss_star().is_constant();
    s.deg_gauss = s.gauss_constant ? 0 : covering_degree(spec.gauss());
    s.deg_gauss_star = s.gauss_star_constant ? 0 : covering_degree(spec.gauss_star());
    s.end_count = static_cast<int>(spec.ends().size());
    int total = s.deg_gauss + s.deg_gauss_star;
    s.inequality_holds = total >= s.end_count;
    s.equality = total == s.end_count;
    s.all_ends_embedded = s.equality;
    return s;
}

void MotionMatrix::require_unit_determinant() const
{
    if (a * d - b * c != GaussianRational(1))
        throw std::domain_error("motion matrix must have determinant 1");
}

HermitianPoint apply_motion(const MotionMatrix& m, const HermitianPoint& x)
{
    m.require_unit_determinant();
    return x.congruence(m.to_complex());
}

namespace {

RationalMap mobius_of_map(const MotionMatrix& m, const RationalMap& g)
{
    RationalMap den = g * m.c + RationalMap::constant(m.d);
    if (den.is_zero())
        throw std::domain_error("motion sends a Gauss map to the constant infinity");
    return (g * m.a + RationalMap::constant(m.b)) / den;
}

}  // namespace

FrontSpec apply_motion(const MotionMatrix& m, const FrontSpec& spec)
{
    m.require_unit_determinant();
    RationalMap g2 = mobius_of_map(m, spec.gauss());
    RationalMap gs2 = mobius_of_map(m, spec.gauss_star());
    // Regauge the scale so that evaluated fronts transform by congruence:
    // xi' = xi / (c G + d), hence L' = L - 2 log|c G + d|.
    FrontSpec probe(g2, gs2, 1.0, spec.ends());
    FrontEvaluator orig(spec);
    FrontEvaluator moved(probe);
    for (const auto& z : kGaugeProbes) {
        std::complex<double> gz = spec.gauss().eval(z);
        if (!std::isfinite(gz.real()) || !std::isfinite(gz.imag())) continue;
        std::complex<double> factor = m.c.to_complex() * gz + m.d.to_complex();
        if (std::abs(factor) < 1e-8 || std::abs(factor) > 1e8) continue;
        double l_orig = orig.log_xi_sq(z);
        double l_moved0 = moved.log_xi_sq(z);
        if (!std::isfinite(l_orig) || !std::isfinite(l_moved0)) continue;
        double delta = l_orig - 2.0 * std::log(std::abs(factor)) - l_moved0;
        return FrontSpec(g2, gs2, std::exp(0.5 * delta), spec.ends());
    }
    throw std::runtime_error("could not regauge the moved spec (no usable probe point)");
}

FrontSpec dual(const FrontSpec& spec)
{
    return FrontSpec(spec.gauss_star(), spec.gauss(), spec.scale(), spec.ends());
}

FrontEvaluator::FrontEvaluator(const FrontSpec& spec) : spec_(spec)
{
    dgauss_ = spec_.gauss().derivative();
    dgauss_star_ = spec_.gauss_star().derivative();
    diff_ = spec_.gauss() - spec_.gauss_star();
    const RationalMap& diff = diff_;
    RationalMap eta = dgauss_ / diff;
    direct_.pf = partial_fractions(eta);
    // Evaluation presupposes the period condition: a non-real residue makes
    // log|xi|^2 multivalued.
    for (const auto& pole : direct_.pf.poles) {
        bool real = pole.exact ? pole.exact_coeff[0].is_real()
                               : std::fabs(pole.numeric_coeff[0].imag()) <= kResidueRealityTol;
        if (!real)
            throw std::domain_error(
                "period condition fails (non-real residue); the front is not single-valued");
    }
    direct_.log_scale_sq = 2.0 * std::log(spec_.scale());
    direct_.valid = true;

    // Reciprocal chart: valid whenever neither map is identically zero.
    if (!spec_.gauss().is_zero() && !spec_.gauss_star().is_zero()) {
        swap_gauss_ = spec_.gauss().reciprocal();
        swap_gauss_star_ = spec_.gauss_star().reciprocal();
        RationalMap diff2 = swap_gauss_ - swap_gauss_star_;
        if (!diff2.is_zero()) {
            RationalMap eta2 = swap_gauss_.derivative() / diff2;
            swapped_.pf = partial_fractions(eta2);
            swapped_.log_scale_sq = 0.0;
            // L' = L - 2 log|G|; fix the additive constant at a probe point.
            for (const auto& z : kGaugeProbes) {
                std::complex<double> gz = spec_.gauss().eval(z);
                if (!std::isfinite(gz.real()) || !std::isfinite(gz.imag())) continue;
                double m = std::abs(gz);
                if (m < 1e-8 || m > 1e8) continue;
                double l = eval_primitive(direct_, z);
                double l0 = eval_primitive(swapped_, z);
                if (!std::isfinite(l) || !std::isfinite(l0)) continue;
                swapped_.log_scale_sq = l - 2.0 * std::log(m) - l0;
                swapped_.valid = true;
                break;
            }
        }
    }

    exclusion_ = spec_.ends();
    for (const RationalMap* g : {&spec_.gauss(), &spec_.gauss_star()}) {
        if (g->den().is_constant()) continue;
        for (const auto& r : poly_roots(g->den()))
            if (!point_in_set(r.point, exclusion_, 1e-9)) exclusion_.push_back(r.point);
    }
    std::sort(exclusion_.begin(), exclusion_.end(), ExtendedPoint::order_before);
}

double FrontEvaluator::eval_primitive(const PrimitiveData& prim, std::complex<double> z) const
{
    double acc = prim.log_scale_sq;
    std::complex<double> holo(0.0, 0.0);
    const Polynomial& poly = prim.pf.poly_part;
    if (!poly.is_zero()) {
        for (int k = 0; k <= poly.degree(); ++k) {
            std::complex<double> a = poly.coeff(static_cast<std::size_t>(k)).to_complex();
            if (a == 0.0) continue;
            holo += a * std::pow(z, k + 1) / double(k + 1);
        }
    }
    for (const auto& t : prim.pf.poles) {
        std::complex<double> d = z - t.location.to_complex();
        // Residue term: after a passed period check Im(residue) is zero
        // (exact) or negligible, so the real-log branch is single-valued.
        std::complex<double> res =
            t.exact ? t.exact_coeff[0].to_complex() : t.numeric_coeff[0];
        acc += 2.0 * res.real() * std::log(std::abs(d));
        for (int k = 2; k <= t.order; ++k) {
            std::complex<double> c = t.exact ? t.exact_coeff[static_cast<std::size_t>(k - 1)].to_complex()
                                             : t.numeric_coeff[static_cast<std::size_t>(k - 1)];
            holo += c * std::pow(d, 1 - k) / double(1 - k);
        }
    }
    return acc + 2.0 * holo.real();
}

double FrontEvaluator::log_xi_sq(std::complex<double> z) const
{
    return eval_primitive(direct_, z);
}

void gauss_frame_from_values(std::complex<double> g, std::complex<double> gs, double u,
                             HermitianPoint& f, HermitianPoint& nu)
{
    std::complex<double> d = g - gs;
    if (!std::isfinite(g.real()) || !std::isfinite(gs.real()) || !std::isfinite(u) ||
        u == 0.0 || std::abs(d) == 0.0)
        throw std::domain_error("front evaluation at an end or pole");
    double dd = std::norm(d);
    double g2 = std::norm(g);
    double gs2 = std::norm(gs);
    f.h11 = g2 / u + u * gs2 / dd;
    f.h12 = g / u + u * gs / dd;
    f.h22 = 1.0 / u + u / dd;
    nu.h11 = g2 / u - u * gs2 / dd;
    nu.h12 = g / u - u * gs / dd;
    nu.h22 = 1.0 / u - u / dd;
    if (!std::isfinite(f.h11) || !std::isfinite(f.h22) || !std::isfinite(f.h12.real()))
        throw std::domain_error("front evaluation overflowed near a pole");
}

void FrontEvaluator::frame_raw(const PrimitiveData& prim, const RationalMap& g,
                               const RationalMap& gs, std::complex<double> z, HermitianPoint& f,
                               HermitianPoint& nu) const
{
    double u = std::exp(eval_primitive(prim, z));
    gauss_frame_from_values(g.eval(z), gs.eval(z), u, f, nu);
}

void FrontEvaluator::frame(std::complex<double> z, double t, HermitianPoint& f_t,
                           HermitianPoint& nu_t) const
{
    std::complex<double> gv = spec_.gauss().eval(z);
    std::complex<double> gsv = spec_.gauss_star().eval(z);
    const double big = 1e6;
    bool direct_ok = std::isfinite(gv.real()) && std::isfinite(gv.imag()) &&
                     std::isfinite(gsv.real()) && std::isfinite(gsv.imag()) &&
                     std::abs(gv) <= big && std::abs(gsv) <= big;
    HermitianPoint f, nu;
    if (direct_ok || !swapped_.valid) {
        frame_raw(direct_, spec_.gauss(), spec_.gauss_star(), z, f, nu);
    } else {
        // Work in the reciprocal chart and undo the congruence by
        // a = {{0,i},{i,0}}: X -> {{x22, conj(x12)}, {x12, x11}}.
        HermitianPoint fs, nus;
        frame_raw(swapped_, swap_gauss_, swap_gauss_star_, z, fs, nus);
        f.h11 = fs.h22;
        f.h22 = fs.h11;
        f.h12 = std::conj(fs.h12);
        nu.h11 = nus.h22;
        nu.h22 = nus.h11;
        nu.h12 = std::conj(nus.h12);
    }
    double ch = std::cosh(t), sh = std::sinh(t);
    f_t = HermitianPoint::combine(ch, f, sh, nu);
    nu_t = HermitianPoint::combine(ch, nu, sh, f);
}

HermitianPoint FrontEvaluator::surface(std::complex<double> z, double t) const
{
    HermitianPoint f, nu;
    frame(z, t, f, nu);
    return f;
}

HermitianPoint FrontEvaluator::normal(std::complex<double> z, double t) const
{
    HermitianPoint f, nu;
    frame(z, t, f, nu);
    return nu;
}

double FrontEvaluator::log_rho_abs(std::complex<double> z) const
{
    if (rho_identically_zero()) return -std::numeric_limits<double>::infinity();
    if (rho_identically_infinite()) return std::numeric_limits<double>::infinity();
    double l = log_xi_sq(z);
    return 2.0 * l + std::log(std::abs(dgauss_star_.eval(z))) -
           std::log(std::abs(dgauss_.eval(z))) - 2.0 * std::log(std::abs(diff_.eval(z)));
}

FrontSample evaluate_front(const FrontSpec& spec, std::complex<double> z, double t)
{
    FrontEvaluator ev(spec);
    FrontSample s;
    ev.frame(z, t, s.surface, s.normal);
    s.ball = s.surface.ball_point();
    return s;
}

}  // namespace flatfront
