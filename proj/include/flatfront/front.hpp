// Construction pipeline for flat fronts in hyperbolic 3-space from a pair
// of hyperbolic Gauss maps: end inference, front/period conditions, the
// log-modulus of the invariant xi, surface/normal evaluation, canonical
// forms and Hopf differential, end classification, rigid motions, duality.
#pragma once

#include "flatfront/partial_fractions.hpp"
#include "flatfront/sphere.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flatfront {

inline constexpr double kResidueRealityTol = 1e-10;

// 2x2 Hermitian matrix <-> point of Lorentz-Minkowski 4-space:
// h11 = x0+x3, h12 = x1+i*x2, h22 = x0-x3.
struct HermitianPoint {
    double h11 = 0.0;
    double h22 = 0.0;
    std::complex<double> h12{0.0, 0.0};

    double x0() const { return 0.5 * (h11 + h22); }
    double x1() const { return h12.real(); }
    double x2() const { return h12.imag(); }
    double x3() const { return 0.5 * (h11 - h22); }
    double det() const { return h11 * h22 - std::norm(h12); }

    static HermitianPoint from_coords(double x0, double x1, double x2, double x3)
    {
        return {x0 + x3, x0 - x3, {x1, x2}};
    }
    // Lorentz inner product <X,Y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3.
    static double inner(const HermitianPoint& x, const HermitianPoint& y)
    {
        return -x.x0() * y.x0() + x.x1() * y.x1() + x.x2() * y.x2() + x.x3() * y.x3();
    }
    static HermitianPoint combine(double ca, const HermitianPoint& a, double cb,
                                  const HermitianPoint& b)
    {
        return {ca * a.h11 + cb * b.h11, ca * a.h22 + cb * b.h22, ca * a.h12 + cb * b.h12};
    }
    // Congruence X -> m X m^* for a complex 2x2 matrix m = {{a,b},{c,d}}.
    HermitianPoint congruence(const std::array<std::complex<double>, 4>& m) const;
    // Poincare ball model point (x1,x2,x3)/(1+x0).
    std::array<double, 3> ball_point() const
    {
        double s = 1.0 + x0();
        return {x1() / s, x2() / s, x3() / s};
    }
};

struct PeriodPole {
    ExtendedPoint location;
    int order;  // pole order of the form dG/(G-G*)
    HybridScalar residue_value;
    bool residue_real;
};

struct PeriodReport {
    std::vector<PeriodPole> poles;
    bool verdict = false;
    // Why residue reality decides the period condition on a punctured sphere.
    std::string justification;
};

struct FrontConditionResult {
    bool holds = false;
    std::optional<ExtendedPoint> witness;  // a common branch point on failure
    bool horosphere = false;               // one Gauss map constant
};

struct CanonicalData {
    // omega = omega_rational * xi^-2 dz, theta = theta_rational * xi^2 dz,
    // Q = hopf dz^2 with hopf = omega_rational * theta_rational.
    RationalMap omega_rational;
    RationalMap theta_rational;
    RationalMap hopf;
};

struct EndRecord {
    ExtendedPoint point;
    int ord_hopf = 0;  // quadratic-differential order (w-chart weight at infinity)
    bool regular = false;                  // ord_hopf >= -2
    bool complete_pole_criterion = false;  // ord_hopf <= -1
    ExtendedPoint gauss_value;
    ExtendedPoint gauss_star_value;
    bool values_agree = false;
};

struct OssermanSummary {
    int deg_gauss = 0;       // 0 marks a constant map
    int deg_gauss_star = 0;
    int end_count = 0;
    bool gauss_constant = false;
    bool gauss_star_constant = false;
    bool inequality_holds = false;   // d + d* >= k
    bool equality = false;           // d + d* == k
    bool all_ends_embedded = false;  // equivalent to equality
};

class FrontSpec {
public:
    // Validates the pair, infers the minimal end set and unions extra_ends.
    FrontSpec(RationalMap gauss, RationalMap gauss_star, double scale = 1.0,
              std::vector<ExtendedPoint> extra_ends = {});

    const RationalMap& gauss() const { return gauss_; }
    const RationalMap& gauss_star() const { return gauss_star_; }
    double scale() const { return scale_; }
    int genus() const { return 0; }
    const std::vector<ExtendedPoint>& ends() const { return ends_; }
    bool horosphere() const { return gauss_.is_constant() || gauss_star_.is_constant(); }

private:
    RationalMap gauss_;
    RationalMap gauss_star_;
    double scale_;
    std::vector<ExtendedPoint> ends_;
};

// All sphere solutions of G = G* (zeros of the difference, common poles,
// infinity when both values agree there).
std::vector<ExtendedPoint> infer_ends(const RationalMap& gauss, const RationalMap& gauss_star,
                                      double tol = 1e-12);

// True iff the critical divisors have disjoint supports (vacuously true with
// a horosphere flag when one map is constant).
FrontConditionResult front_condition(const RationalMap& gauss, const RationalMap& gauss_star,
                                     double tol = 1e-12);

PeriodReport period_check(const RationalMap& gauss, const RationalMap& gauss_star,
                          double tol = 1e-12);
inline PeriodReport period_check(const FrontSpec& spec)
{
    return period_check(spec.gauss(), spec.gauss_star());
}

CanonicalData canonical_data(const FrontSpec& spec);

// Hopf order at a sphere point with the dz^2 chart weight at infinity.
int hopf_order_at(const RationalMap& hopf, const ExtendedPoint& p, double tol = 1e-12);

std::vector<EndRecord> classify_ends(const FrontSpec& spec, double tol = 1e-12);
OssermanSummary osserman_summary(const FrontSpec& spec);

// det = 1 Mobius motion with exact entries.
struct MotionMatrix {
    GaussianRational a, b, c, d;
    void require_unit_determinant() const;
    std::array<std::complex<double>, 4> to_complex() const
    {
        return {a.to_complex(), b.to_complex(), c.to_complex(), d.to_complex()};
    }
};

// Gauss maps transform by the Mobius action; the scale is regauged so that
// the evaluated front transforms by the exact congruence X -> m X m^*.
FrontSpec apply_motion(const MotionMatrix& m, const FrontSpec& spec);
HermitianPoint apply_motion(const MotionMatrix& m, const HermitianPoint& x);

// Swap of the two Gauss maps (the canonical forms swap up to the xi gauge).
FrontSpec dual(const FrontSpec& spec);

// Point evaluator. Precomputes the partial-fraction primitive of
// eta = dG/(G-G*) (and the reciprocal-chart data used near poles of the
// Gauss maps); safe for concurrent use once constructed.
class FrontEvaluator {
public:
    explicit FrontEvaluator(const FrontSpec& spec);

    const FrontSpec& spec() const { return spec_; }

    // L(z) = log |xi(z)|^2 = 2 log|c| + 2 Re F(z), F the canonical primitive.
    double log_xi_sq(std::complex<double> z) const;

    // Surface point and unit normal of the parallel front at distance t.
    HermitianPoint surface(std::complex<double> z, double t) const;
    HermitianPoint normal(std::complex<double> z, double t) const;
    void frame(std::complex<double> z, double t, HermitianPoint& f_t, HermitianPoint& nu_t) const;

    // log |rho(z)|, rho = theta/omega; -inf where theta vanishes identically.
    double log_rho_abs(std::complex<double> z) const;
    bool rho_identically_zero() const { return spec_.gauss_star().is_constant(); }
    bool rho_identically_infinite() const { return spec_.gauss().is_constant(); }

    // Ends plus poles of both Gauss maps: points meshes must avoid.
    const std::vector<ExtendedPoint>& exclusion_points() const { return exclusion_; }

private:
    struct PrimitiveData {
        PFDecomp pf;            // decomposition of the eta coefficient
        double log_scale_sq;    // additive constant in L
        bool valid = false;
    };
    double eval_primitive(const PrimitiveData& prim, std::complex<double> z) const;
    void frame_raw(const PrimitiveData& prim, const RationalMap& g, const RationalMap& gs,
                   std::complex<double> z, HermitianPoint& f, HermitianPoint& nu) const;

    FrontSpec spec_;
    PrimitiveData direct_;
    RationalMap dgauss_, dgauss_star_, diff_;
    // Reciprocal chart (both Gauss maps inverted) used near their poles.
    RationalMap swap_gauss_, swap_gauss_star_;
    PrimitiveData swapped_;
    std::vector<ExtendedPoint> exclusion_;
};

// One-shot helper mirroring the pipeline operation.
struct FrontSample {
    HermitianPoint surface;
    HermitianPoint normal;
    std::array<double, 3> ball;
};
FrontSample evaluate_front(const FrontSpec& spec, std::complex<double> z, double t);

// Surface point f and normal nu from Gauss-map values and u = |xi|^2; every
// occurrence of xi enters through u only. Shared by the rational and torus
// backends. Throws where the data degenerates (u = 0, G = G*).
void gauss_frame_from_values(std::complex<double> g, std::complex<double> gs, double u,
                             HermitianPoint& f, HermitianPoint& nu);

}  // namespace flatfront
