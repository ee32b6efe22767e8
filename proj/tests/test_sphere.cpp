#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatfront/numeric_poly.hpp"
#include "flatfront/sphere.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace flatfront;
using testutil::gr;
using testutil::rm;

namespace {

ExtendedPoint pt(long num, long den = 1) { return ExtendedPoint::exact(gr(num, den)); }

// Independent degree oracle: numeric fiber count of a generic value.
int degree_oracle(const RationalMap& g, testutil::Rng& rng)
{
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::complex<double> b = rng.point(2.0);
        CPoly p;
        std::size_t n = std::max(g.num().coeffs().size(), g.den().coeffs().size());
        p.resize(n, {0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> nc =
                k < g.num().coeffs().size() ? g.num().coeffs()[k].to_complex() : 0.0;
            std::complex<double> dc =
                k < g.den().coeffs().size() ? g.den().coeffs()[k].to_complex() : 0.0;
            p[k] = nc - b * dc;
        }
        cpoly_trim(p, 1e-12);
        if (p.size() < 2) continue;
        auto roots = durand_kerner(p);
        auto clustered = cluster_roots(roots, 1e-6);
        bool all_simple = true;
        for (const auto& c : clustered) all_simple = all_simple && c.multiplicity == 1;
        if (!all_simple) continue;  // unlucky probe near a critical value
        int finite = static_cast<int>(roots.size());
        int at_inf = g.map_degree() - static_cast<int>(p.size() - 1);
        return finite + at_inf;
    }
    FAIL("degree oracle could not find a regular probe");
    return -1;
}

}  // namespace

TEST_CASE("extended evaluation, including infinity")
{
    CHECK(evaluate(rm("z^2"), ExtendedPoint::infinity()).is_infinity());

    RationalMap gs = rm("(z^2+6*z)/(2*z+5)");
    CHECK(evaluate(gs, pt(-2)).exact_value() == gr(-8));
    CHECK(evaluate(gs, pt(-3, 2)).exact_value() == gr(-27, 8));  // = (-3/2)^3
    CHECK(evaluate(gs, ExtendedPoint::infinity()).is_infinity());
    CHECK(evaluate(rm("(2*z+1)/(3*z-1)"), ExtendedPoint::infinity()).exact_value() == gr(2, 3));
    CHECK(evaluate(rm("1/z"), pt(0)).is_infinity());

    ExtendedPoint numeric = evaluate(gs, ExtendedPoint::numeric({-2.0, 0.0}));
    CHECK(numeric.is_numeric());
    CHECK(std::abs(numeric.to_complex() - std::complex<double>(-8.0, 0.0)) < 1e-12);
}

TEST_CASE("local orders")
{
    CHECK(order_at(rm("z^2"), pt(0)) == 2);
    CHECK(order_at(rm("1/z"), pt(0)) == -1);
    CHECK(order_at(rm("z^3"), ExtendedPoint::infinity()) == -3);
    // Hopf coefficient of the four-end example at a = 2, order -2 at z = 1.
    RationalMap hopf = rm("-(2*(2*z^2+2*z+2))/(4*z*(z+1)^2*(z-1)^2)");
    CHECK(order_at(hopf, pt(1)) == -2);
    CHECK(order_at(hopf, pt(0)) == -1);
}

TEST_CASE("order is additive under multiplication")
{
    testutil::Rng rng(111);
    for (int it = 0; it < 20; ++it) {
        RationalMap a = rng.rational_map(4);
        RationalMap b = rng.rational_map(4);
        if (a.is_zero() || b.is_zero()) continue;
        GaussianRational p = rng.gaussian(false);
        ExtendedPoint q = ExtendedPoint::exact(p);
        CHECK(order_at(a * b, q) == order_at(a, q) + order_at(b, q));
        CHECK(order_at(a * b, ExtendedPoint::infinity()) ==
              order_at(a, ExtendedPoint::infinity()) + order_at(b, ExtendedPoint::infinity()));
    }
}

TEST_CASE("covering degree with independent fiber-count oracle")
{
    testutil::Rng rng(222);
    CHECK(covering_degree(rm("z^2")) == 2);
    CHECK(covering_degree(rm("z^3")) == 3);
    RationalMap g = rm("(z^2+2*z)/(2*z+1)");
    CHECK(covering_degree(g) == 2);
    CHECK(degree_oracle(g, rng) == 2);
    for (int it = 0; it < 10; ++it) {
        RationalMap r = rng.rational_map(5);
        if (r.is_constant()) continue;
        CHECK(covering_degree(r) == degree_oracle(r, rng));
    }
    CHECK_THROWS_AS(covering_degree(rm("7")), std::domain_error);
}

TEST_CASE("degree is Mobius-invariant")
{
    testutil::Rng rng(333);
    for (int it = 0; it < 15; ++it) {
        RationalMap g = rng.rational_map(5);
        if (g.is_constant()) continue;
        // Random nonsingular substitution z -> (a z + b)/(c z + d).
        GaussianRational a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian(),
                         d = rng.gaussian();
        if ((a * d - b * c).is_zero()) continue;
        RationalMap composed = g.compose_mobius(a, b, c, d);
        if (composed.is_constant()) continue;
        CHECK(covering_degree(composed) == covering_degree(g));
    }
}

TEST_CASE("residues, including the point at infinity")
{
    CHECK(residue({rm("1/z")}, pt(0)).exact_value == gr(1));

    RationalOneForm eta{rm("(3*z*(2*z+5))/((z-1)*(z+2)*(2*z+3))")};
    CHECK(residue(eta, pt(-3, 2)).exact_value == gr(18, 5));
    CHECK(residue(eta, pt(1)).exact_value == gr(7, 5));
    CHECK(residue(eta, pt(-2)).exact_value == gr(-2));
    CHECK(residue(eta, ExtendedPoint::infinity()).exact_value == gr(-3));
    // Not a pole: residue 0.
    CHECK(residue(eta, pt(5)).exact_value == gr(0));
}

TEST_CASE("residue theorem: all sphere residues sum to zero")
{
    testutil::Rng rng(444);
    int exact_cases = 0, numeric_cases = 0;
    while (exact_cases + numeric_cases < 40) {
        RationalMap r = rng.rational_map(6);
        if (r.is_zero()) continue;
        RationalOneForm form{r};
        bool all_exact = true;
        GaussianRational exact_sum(0);
        std::complex<double> numeric_sum(0.0, 0.0);
        for (const auto& [point, order] : form_poles(form)) {
            (void)order;
            HybridScalar res = residue(form, point);
            all_exact = all_exact && res.exact;
            if (res.exact) exact_sum += res.exact_value;
            numeric_sum += res.approx;
        }
        if (all_exact) {
            CHECK(exact_sum == gr(0));
            ++exact_cases;
        } else {
            CHECK(std::abs(numeric_sum) < 1e-9);
            ++numeric_cases;
        }
    }
    CHECK(exact_cases > 0);
    CHECK(numeric_cases > 0);
}

TEST_CASE("critical divisors and Riemann-Hurwitz")
{
    Divisor d1 = critical_divisor(rm("z^2"));
    REQUIRE(d1.entries.size() == 2);
    CHECK(d1.total_order() == 2);

    Divisor d2 = critical_divisor(rm("z^3"));
    CHECK(d2.total_order() == 4);
    for (const auto& e : d2.entries) CHECK(e.order == 2);

    // (z^2+2z)/(2z+1): two simple branch points at the roots of 2z^2+2z+2.
    Divisor d3 = critical_divisor(rm("(z^2+2*z)/(2*z+1)"));
    REQUIRE(d3.entries.size() == 2);
    CHECK(d3.total_order() == 2);
    for (const auto& e : d3.entries) {
        std::complex<double> z = e.point.to_complex();
        std::complex<double> residual = 2.0 * z * z + 2.0 * z + 2.0;
        CHECK(std::abs(residual) < 1e-9);
    }
}

TEST_CASE("Riemann-Hurwitz on random maps (property)")
{
    testutil::Rng rng(555);
    int done = 0;
    while (done < 40) {
        RationalMap g = rng.rational_map(6);
        if (g.is_constant()) continue;
        Divisor div = critical_divisor(g);
        CHECK(div.total_order() == 2 * covering_degree(g) - 2);
        ++done;
    }
}

TEST_CASE("fibers sum to the degree")
{
    testutil::Rng rng(666);
    RationalMap g = rm("(z^2+2*z)/(2*z+1)");
    for (const ExtendedPoint& b :
         {pt(0), pt(1), pt(-17, 3), ExtendedPoint::infinity(),
          ExtendedPoint::numeric({0.37, -1.22})}) {
        int total = 0;
        for (const auto& [point, mult] : preimages(g, b)) {
            (void)point;
            total += mult;
        }
        CHECK(total == covering_degree(g));
    }
    for (int it = 0; it < 10; ++it) {
        RationalMap r = rng.rational_map(4);
        if (r.is_constant()) continue;
        ExtendedPoint b = ExtendedPoint::exact(rng.gaussian());
        int total = 0;
        for (const auto& [point, mult] : preimages(r, b)) {
            (void)point;
            total += mult;
        }
        CHECK(total == covering_degree(r));
    }
}
