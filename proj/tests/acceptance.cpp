// Acceptance suite: runs every pinned criterion at its stated tolerance and
// prints one pass/fail line each. Exit status = number of failed criteria.
#include "flatfront/elliptic.hpp"
#include "flatfront/front.hpp"
#include "flatfront/report.hpp"
#include "flatfront/valuedist.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

using namespace flatfront;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::printf("[%s] criterion %2d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), elapsed, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

GaussianRational grat(long num, long den = 1)
{
    return GaussianRational(rational_of(num, den));
}

ExtendedPoint pt(long num, long den = 1) { return ExtendedPoint::exact(grat(num, den)); }

RationalMap parse(const std::string& text, const ParamBindings& bindings = {})
{
    return *parse_function(text, bindings).rational;
}

bool check_residues(const PeriodReport& rep,
                    const std::vector<std::pair<ExtendedPoint, GaussianRational>>& want,
                    std::string& detail)
{
    for (const auto& [where, value] : want) {
        bool found = false;
        for (const auto& p : rep.poles) {
            if (!p.location.matches(where, 1e-12)) continue;
            found = true;
            if (!p.residue_value.exact || !(p.residue_value.exact_value == value)) {
                detail = "residue mismatch at " + where.to_string();
                return false;
            }
        }
        if (!found) {
            detail = "missing pole at " + where.to_string();
            return false;
        }
    }
    return true;
}

// Random period-valid front: G* = G - G' R / R', so dG/(G-G*) = d log R has
// integer residues and the period condition holds by construction.
class FrontGenerator {
public:
    explicit FrontGenerator(unsigned seed) : rng_(seed) {}

    std::optional<FrontSpec> next()
    {
        RationalMap g = random_base_map();
        if (g.is_constant()) return std::nullopt;
        long r1n = pick(-4, 4), r2n = pick(-4, 4);
        if (r1n == r2n) return std::nullopt;
        long e1 = pick_exponent(), e2 = pick_exponent();
        // log-derivative of R = (z-r1)^e1 (z-r2)^e2
        RationalMap lin1 = RationalMap::identity() - RationalMap::constant(grat(r1n));
        RationalMap lin2 = RationalMap::identity() - RationalMap::constant(grat(r2n));
        RationalMap dlog =
            RationalMap::constant(grat(e1)) / lin1 + RationalMap::constant(grat(e2)) / lin2;
        RationalMap gs = g - g.derivative() / dlog;
        if (gs.is_constant() || gs == g) return std::nullopt;
        if (gs.map_degree() > 4 || g.map_degree() > 4) return std::nullopt;
        try {
            FrontSpec spec(g, gs);
            if (!front_condition(g, gs).holds) return std::nullopt;
            // Occasionally move the whole front by an exact rigid motion.
            if (pick(0, 3) == 0) {
                GaussianRational b = grat(pick(-2, 2), pick(1, 2));
                GaussianRational c = grat(pick(-2, 2), pick(1, 2));
                MotionMatrix m{GaussianRational(1) + b * c, b, c, GaussianRational(1)};
                RationalMap g2 = (g * m.a + RationalMap::constant(m.b)) /
                                 (g * m.c + RationalMap::constant(m.d));
                RationalMap gs2 = (gs * m.a + RationalMap::constant(m.b)) /
                                  (gs * m.c + RationalMap::constant(m.d));
                if (!g2.is_constant() && !gs2.is_constant() && g2 != gs2)
                    return FrontSpec(g2, gs2);
            }
            return spec;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

private:
    long pick(long lo, long hi)
    {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }
    long pick_exponent()
    {
        static const long choices[] = {-2, -1, 1, 2};
        return choices[pick(0, 3)];
    }
    RationalMap random_base_map()
    {
        // Polynomial of degree 1-2, or such a polynomial over a linear factor.
        std::vector<GaussianRational> c(static_cast<std::size_t>(pick(1, 2)) + 1);
        for (auto& x : c) x = grat(pick(-3, 3), pick(1, 2));
        if (c.back().is_zero()) c.back() = GaussianRational(1);
        Polynomial num(std::move(c));
        if (pick(0, 1) == 0) return RationalMap(num, Polynomial::one());
        Polynomial den(std::vector<GaussianRational>{grat(pick(-3, 3)), GaussianRational(1)});
        return RationalMap(num, den);
    }
    std::mt19937_64 rng_;
};

}  // namespace

int main()
{
    std::printf("acceptance suite\n");

    criterion(1, "residue table of the four-end front at a in {2, -3, 1/2}", 1.0,
              [](std::string& detail) {
                  struct A {
                      long num, den;
                  } values[] = {{2, 1}, {-3, 1}, {1, 2}};
                  for (const auto& av : values) {
                      GaussianRational a = grat(av.num, av.den);
                      ParamBindings b{{"a", a}};
                      PeriodReport rep =
                          period_check(parse("z^2"), parse("(z*(z+a))/(a*z+1)", b));
                      GaussianRational one(1);
                      std::vector<std::pair<ExtendedPoint, GaussianRational>> want = {
                          {pt(1), (one + a) / a},
                          {pt(-1), (a - one) / a},
                          {ExtendedPoint::infinity(), grat(-2)}};
                      if (!check_residues(rep, want, detail)) return false;
                      if (!rep.verdict) {
                          detail = "verdict should pass";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "residue table of the five-end front", 1.0, [](std::string& detail) {
        PeriodReport rep = period_check(parse("z^3"), parse("(z*(z+6))/(2*z+5)"));
        std::vector<std::pair<ExtendedPoint, GaussianRational>> want = {
            {pt(1), grat(7, 5)},
            {pt(-2), grat(-2)},
            {pt(-3, 2), grat(18, 5)},
            {ExtendedPoint::infinity(), grat(-3)}};
        return check_residues(rep, want, detail) && rep.verdict;
    });

    criterion(3, "Hopf pole orders of the four-end front", 1.0, [](std::string& detail) {
        ParamBindings b{{"a", grat(2)}};
        FrontSpec spec(parse("z^2"), parse("(z*(z+a))/(a*z+1)", b));
        CanonicalData data = canonical_data(spec);
        const std::pair<ExtendedPoint, int> want[] = {
            {pt(0), -1}, {pt(1), -2}, {pt(-1), -2}, {ExtendedPoint::infinity(), -1}};
        for (const auto& [where, ord] : want) {
            if (hopf_order_at(data.hopf, where) != ord) {
                detail = "wrong order at " + where.to_string();
                return false;
            }
        }
        for (const auto& rec : classify_ends(spec)) {
            if (!rec.regular || !rec.complete_pole_criterion) {
                detail = "end not regular+complete: " + rec.point.to_string();
                return false;
            }
        }
        return true;
    });

    criterion(4, "degree-count verdicts for the three pinned fronts", 10.0,
              [](std::string& detail) {
                  ParamBindings b{{"a", grat(2)}};
                  OssermanSummary k1 =
                      osserman_summary(FrontSpec(parse("z^2"), parse("(z*(z+a))/(a*z+1)", b)));
                  if (!(k1.deg_gauss == 2 && k1.deg_gauss_star == 2 && k1.end_count == 4 &&
                        k1.equality && k1.all_ends_embedded)) {
                      detail = "four-end front";
                      return false;
                  }
                  OssermanSummary k2 =
                      osserman_summary(FrontSpec(parse("z^3"), parse("(z*(z+6))/(2*z+5)")));
                  if (!(k2.deg_gauss == 3 && k2.deg_gauss_star == 2 && k2.end_count == 5 &&
                        k2.equality && k2.all_ends_embedded)) {
                      detail = "five-end front";
                      return false;
                  }
                  TorusFront torus;
                  int d = torus.degree_gauss();
                  int ds = torus.degree_gauss_star();
                  int k = static_cast<int>(torus.ends().size());
                  if (!(d == 2 && ds == 4 && k == 5 && d + ds > k)) {
                      detail = "torus front";
                      return false;
                  }
                  return true;
              });

    criterion(5, "totally ramified value numbers", 5.0, [](std::string& detail) {
        ParamBindings b{{"a", grat(2)}};
        FrontSpec k1(parse("z^2"), parse("(z*(z+a))/(a*z+1)", b));
        TRVReport k1_g = totally_ramified(k1.gauss(), k1.ends());
        TRVReport k1_gs = totally_ramified(k1.gauss_star(), k1.ends());
        if (!(k1_g.nu == Rational(3))) {
            detail = "nu_G of the four-end front";
            return false;
        }
        if (!(k1_gs.nu == Rational(2))) {
            detail = "nu_G* of the four-end front";
            return false;
        }
        FrontSpec k2(parse("z^3"), parse("(z*(z+6))/(2*z+5)"));
        TRVReport k2_gs = totally_ramified(k2.gauss_star(), k2.ends());
        if (!(k2_gs.nu == Rational(1) && k2_gs.r0 == 0 && k2_gs.l0 == 2)) {
            detail = "nu_G* of the five-end front";
            return false;
        }
        for (const auto& v : k2_gs.values) {
            if (v.exceptional || v.min_multiplicity != 2) {
                detail = "five-end front G*: ramified multiplicities";
                return false;
            }
        }
        // nu_G of the five-end front is pinned to the recount: the omitted
        // values are exactly {0, inf}, every other candidate keeps a simple
        // fiber point in M, so nu_G = 2.
        TRVReport k2_g = totally_ramified(k2.gauss(), k2.ends());
        if (!(k2_g.nu == Rational(2) && k2_g.r0 == 2 && k2_g.l0 == 0)) {
            detail = "nu_G of the five-end front (expected the recount value 2)";
            return false;
        }
        return true;
    });

    criterion(6, "main inequality on 500 generated valid fronts", 60.0,
              [](std::string& detail) {
                  FrontGenerator gen(987654321u);
                  int produced = 0;
                  int applicable_count = 0;
                  int attempts = 0;
                  while (produced < 500 && attempts < 20000) {
                      ++attempts;
                      auto spec = gen.next();
                      if (!spec) continue;
                      PeriodReport period = period_check(*spec);
                      if (!period.verdict) {
                          detail = "constructed front failed the period check";
                          return false;
                      }
                      const int k = static_cast<int>(spec->ends().size());
                      TRVReport tg = totally_ramified(spec->gauss(), spec->ends());
                      TRVReport tgs = totally_ramified(spec->gauss_star(), spec->ends());
                      if (!tg.riemann_hurwitz_holds || !tgs.riemann_hurwitz_holds) {
                          detail = "Riemann-Hurwitz failed";
                          return false;
                      }
                      if (!tg.exceptional_bound_holds(k) || !tgs.exceptional_bound_holds(k)) {
                          detail = "k >= d r0 - n0 failed";
                          return false;
                      }
                      if (!tg.per_map_bound_holds(0, k) || !tgs.per_map_bound_holds(0, k)) {
                          detail = "per-map bound failed";
                          return false;
                      }
                      if (2 * 0 - 2 + k > 0) {
                          TheoremVerdict v = verify_main_theorem(tg.nu, tgs.nu, 0, k);
                          if (v.applicable) {
                              ++applicable_count;
                              if (!v.holds) {
                                  detail = "main inequality violated";
                                  return false;
                              }
                          }
                      }
                      ++produced;
                  }
                  if (produced < 500) {
                      detail = "generator yield too low";
                      return false;
                  }
                  std::ostringstream note;
                  note << "500 fronts, " << applicable_count << " with both nu > 2";
                  detail = note.str();
                  return true;
              });

    criterion(7, "geometry invariant sweep (1000 samples)", 30.0, [](std::string& detail) {
        std::vector<FrontSpec> specs;
        ParamBindings b{{"a", grat(2)}};
        specs.push_back(FrontSpec(parse("z^2"), parse("(z*(z+a))/(a*z+1)", b)));
        specs.push_back(FrontSpec(parse("z^3"), parse("(z*(z+6))/(2*z+5)")));
        specs.push_back(FrontSpec(parse("z"), parse("z^2")));
        specs.push_back(FrontSpec(parse("z"), parse("(1/3)*z"), 1.7));

        std::mt19937_64 rng(24601);
        std::uniform_real_distribution<double> coord(-2.5, 2.5), tdist(-1.0, 1.0);
        const MotionMatrix motion{grat(1) + grat(1, 2) * grat(-1, 3), grat(1, 2), grat(-1, 3),
                                  grat(1)};
        for (const auto& spec : specs) {
            FrontEvaluator ev(spec);
            FrontEvaluator ev_same(spec);  // same |c|: must be bit-identical
            FrontSpec moved_spec = apply_motion(motion, spec);
            FrontEvaluator moved(moved_spec);
            int done = 0;
            while (done < 250) {
                std::complex<double> z(coord(rng), coord(rng));
                double t = tdist(rng);
                // Keep a sane distance from ends/poles: |xi|^2 scales like a
                // power of that distance, and the determinant check is an
                // absolute 1e-9 contract.
                bool clear = true;
                for (const auto& p : ev.exclusion_points())
                    if (p.is_finite() && std::abs(z - p.to_complex()) < 0.4) clear = false;
                if (!clear) continue;
                HermitianPoint f, nu;
                try {
                    ev.frame(z, t, f, nu);
                } catch (const std::domain_error&) {
                    continue;
                }
                ++done;
                if (std::fabs(f.det() - 1.0) > 1e-9 || f.x0() <= 0.0) {
                    detail = "det f_t invariant failed";
                    return false;
                }
                if (std::fabs(nu.det() + 1.0) > 1e-9) {
                    detail = "det nu_t invariant failed";
                    return false;
                }
                HermitianPoint f2, nu2;
                ev_same.frame(z, t, f2, nu2);
                if (f.h11 != f2.h11 || f.h22 != f2.h22 || f.h12 != f2.h12) {
                    detail = "same |c| must give identical bits";
                    return false;
                }
                HermitianPoint g, mu;
                try {
                    moved.frame(z, t, g, mu);
                    HermitianPoint want = f.congruence(motion.to_complex());
                    double scale = 1.0 + std::fabs(want.x0());
                    if (std::fabs(g.h11 - want.h11) > 1e-9 * scale ||
                        std::fabs(g.h22 - want.h22) > 1e-9 * scale ||
                        std::abs(g.h12 - want.h12) > 1e-9 * scale) {
                        detail = "Mobius equivariance failed";
                        return false;
                    }
                } catch (const std::domain_error&) {
                }
                if (done % 5 == 0) {
                    // Finite-difference orthogonality away from the singular set.
                    double lr = ev.log_rho_abs(z);
                    if (std::isfinite(lr) && std::fabs(lr) > 0.25) {
                        const double h = 1e-5;
                        try {
                            HermitianPoint fxp = ev.surface(z + h, t);
                            HermitianPoint fxm = ev.surface(z - h, t);
                            HermitianPoint df =
                                HermitianPoint::combine(0.5 / h, fxp, -0.5 / h, fxm);
                            HermitianPoint nt = ev.normal(z, t);
                            double scale = 1.0 + std::fabs(df.x0());
                            if (std::fabs(HermitianPoint::inner(df, nt)) > 1e-6 * scale) {
                                detail = "<df, nu> orthogonality failed";
                                return false;
                            }
                        } catch (const std::domain_error&) {
                        }
                    }
                }
            }
        }
        return true;
    });

    criterion(8, "Riemann-Hurwitz and residue theorem on 200 random inputs", 10.0,
              [](std::string& detail) {
                  std::mt19937_64 rng(31337);
                  auto rand_rat = [&](long m, long d) {
                      std::uniform_int_distribution<long> num(-m, m), den(1, d);
                      return rational_of(num(rng), den(rng));
                  };
                  auto rand_poly = [&](int maxdeg, bool imag) {
                      std::uniform_int_distribution<int> degd(0, maxdeg);
                      std::uniform_int_distribution<int> imagd(0, 2);
                      int deg = degd(rng);
                      std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
                      for (auto& x : c) {
                          Rational re = rand_rat(5, 3);
                          Rational im = imag && imagd(rng) == 0 ? rand_rat(5, 3) : Rational(0);
                          x = GaussianRational(re, im);
                      }
                      if (c.back().is_zero()) c.back() = GaussianRational(1);
                      return Polynomial(std::move(c));
                  };
                  int rh_done = 0;
                  while (rh_done < 200) {
                      RationalMap g(rand_poly(6, true), rand_poly(6, true));
                      if (g.is_constant()) continue;
                      Divisor div = critical_divisor(g);
                      if (div.total_order() != 2 * covering_degree(g) - 2) {
                          detail = "Riemann-Hurwitz mismatch for " + g.to_string();
                          return false;
                      }
                      ++rh_done;
                  }
                  int res_done = 0;
                  while (res_done < 200) {
                      RationalMap r(rand_poly(6, true), rand_poly(6, true));
                      if (r.is_zero()) continue;
                      RationalOneForm form{r};
                      bool all_exact = true;
                      GaussianRational exact_sum(0);
                      std::complex<double> num_sum(0.0, 0.0);
                      for (const auto& [point, order] : form_poles(form)) {
                          (void)order;
                          HybridScalar res = residue(form, point);
                          all_exact = all_exact && res.exact;
                          if (res.exact) exact_sum += res.exact_value;
                          num_sum += res.approx;
                      }
                      if (all_exact) {
                          if (!exact_sum.is_zero()) {
                              detail = "exact residue sum nonzero";
                              return false;
                          }
                      } else if (std::abs(num_sum) > 1e-9) {
                          detail = "numeric residue sum too large";
                          return false;
                      }
                      ++res_done;
                  }
                  return true;
              });

    criterion(9, "elliptic kernel contracts", 60.0, [](std::string& detail) {
        TorusFront front;
        const SquareTorus& torus = front.torus();
        const double a = front.a();
        std::mt19937_64 rng(8128);
        std::uniform_real_distribution<double> u(0.03, 0.97);
        int done = 0;
        while (done < 100) {
            std::complex<double> z(u(rng), u(rng));
            double dx = z.real() - std::round(z.real());
            double dy = z.imag() - std::round(z.imag());
            if (std::hypot(dx, dy) < 0.05) continue;
            std::complex<double> wp, wpp;
            torus.wp_pair(z, wp, wpp);
            double resid = std::abs(wpp * wpp - 4.0 * wp * (wp * wp - a * a)) /
                           (1.0 + std::pow(std::abs(wp), 3.0));
            if (resid > 1e-8) {
                detail = "differential-equation residual too large";
                return false;
            }
            ++done;
        }
        TorusPeriodReport rep = front.period_check();
        if (!(rep.distance_to_2pii[0] < 1e-6 && rep.distance_to_2pii[1] < 1e-6)) {
            detail = "cycle integral not in 2 pi i Z";
            return false;
        }
        if (front.degree_gauss() != 2 || front.degree_gauss_star() != 4) {
            detail = "degree counts";
            return false;
        }
        if (front.ends().size() != 5) {
            detail = "end count";
            return false;
        }
        return true;
    });

    criterion(10, "corollary case analysis", 1.0, [](std::string& detail) {
        if (corollary_feasibility(0, 4, 4).feasible) {
            detail = "(0,4,4) must be infeasible";
            return false;
        }
        if (corollary_feasibility(1, 5, 5).feasible) {
            detail = "(1,5,5) must be infeasible";
            return false;
        }
        FeasibilityReport c33 = corollary_feasibility(0, 3, 3);
        if (!c33.feasible || !c33.requires_k_at_least_4 ||
            corollary_feasibility(0, 3, 3, 3).feasible) {
            detail = "(0,3,3) must force k >= 4";
            return false;
        }
        FeasibilityReport c44 = corollary_feasibility(1, 4, 4);
        if (!c44.feasible || !c44.requires_embedded_ends) {
            detail = "(1,4,4) must force embedded ends";
            return false;
        }
        return true;
    });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
