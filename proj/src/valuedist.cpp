#include "flatfront/valuedist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flatfront {

namespace {

bool values_match(const ExtendedPoint& a, const ExtendedPoint& b, double tol)
{
    return a.matches(b, tol);
}

// Distinct candidate values, exact representatives preferred.
std::vector<ExtendedPoint> dedupe_values(std::vector<ExtendedPoint> vals, double tol)
{
    std::vector<ExtendedPoint> out;
    for (auto& v : vals) {
        bool merged = false;
        for (auto& o : out) {
            if (values_match(v, o, tol)) {
                if (v.is_exact() && !o.is_exact()) o = v;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), ExtendedPoint::order_before);
    return out;
}

}  // namespace

bool TRVReport::per_map_bound_holds(int genus, int k) const
{
    // nu <= 2 + (2*genus - 2 + k)/d, exact rational comparison.
    Rational bound = Rational(2) + Rational(2 * genus - 2 + k, degree);
    bound.canonicalize();
    return nu <= bound;
}

std::vector<ExtendedPoint> exceptional_values(const RationalMap& g,
                                              const std::vector<ExtendedPoint>& ends,
                                              double tol)
{
    if (g.is_constant()) throw std::domain_error("exceptional values of a constant map");
    const double match_tol = std::max(1e-9, 10.0 * tol);
    std::vector<ExtendedPoint> candidates;
    for (const auto& p : ends) candidates.push_back(evaluate(g, p));
    std::vector<ExtendedPoint> out;
    for (const auto& b : dedupe_values(std::move(candidates), match_tol)) {
        bool omitted = true;
        for (const auto& [point, mult] : preimages(g, b, tol)) {
            (void)mult;
            if (!point_in_set(point, ends, match_tol)) {
                omitted = false;
                break;
            }
        }
        if (omitted) out.push_back(b);
    }
    return out;
}

TRVReport totally_ramified(const RationalMap& g, const std::vector<ExtendedPoint>& ends,
                           double tol)
{
    if (g.is_constant())
        throw std::domain_error("totally ramified values of a constant map");
    const double match_tol = std::max(1e-9, 10.0 * tol);
    TRVReport report;
    report.degree = covering_degree(g);

    Divisor branching = critical_divisor(g, tol);
    report.branching_total = branching.total_order();
    report.riemann_hurwitz_holds = report.branching_total == 2 * (report.degree - 1);

    // Candidate values: critical values plus values at punctures. Any other
    // value has d simple preimages none of which is punctured away, so it is
    // neither omitted nor totally ramified.
    std::vector<ExtendedPoint> candidates;
    for (const auto& e : branching.entries) candidates.push_back(evaluate(g, e.point));
    for (const auto& p : ends) candidates.push_back(evaluate(g, p));

    std::vector<TotallyRamifiedValue> exceptional, ramified;
    for (const auto& b : dedupe_values(std::move(candidates), match_tol)) {
        TotallyRamifiedValue rec;
        rec.value = b;
        rec.exact = b.is_exact() || b.is_infinity();
        int branching_here = 0;
        int min_mult_in_domain = 0;
        bool any_in_domain = false;
        bool all_domain_ramified = true;
        for (const auto& [point, mult] : preimages(g, b, tol)) {
            bool in_ends = point_in_set(point, ends, match_tol);
            rec.fiber.push_back({point, mult, in_ends});
            branching_here += mult - 1;
            if (!in_ends) {
                if (!any_in_domain || mult < min_mult_in_domain) min_mult_in_domain = mult;
                any_in_domain = true;
                if (mult < 2) all_domain_ramified = false;
            }
        }
        if (!any_in_domain) {
            rec.exceptional = true;
            rec.min_multiplicity = 0;  // nu_i = infinity
            report.branching_exceptional += branching_here;
            exceptional.push_back(std::move(rec));
        } else if (all_domain_ramified) {
            rec.exceptional = false;
            rec.min_multiplicity = min_mult_in_domain;
            report.branching_ramified += branching_here;
            ramified.push_back(std::move(rec));
        }
    }
    report.r0 = static_cast<int>(exceptional.size());
    report.l0 = static_cast<int>(ramified.size());
    report.nu = Rational(report.r0);
    for (const auto& rv : ramified) {
        Rational term = Rational(1) - Rational(1, rv.min_multiplicity);
        term.canonicalize();
        report.nu += term;
    }
    report.nu.canonicalize();
    report.values = std::move(exceptional);
    for (auto& rv : ramified) report.values.push_back(std::move(rv));
    return report;
}

TheoremVerdict verify_main_theorem(const Rational& nu_g, const Rational& nu_g_star, int genus,
                                   int k)
{
    if (k < 1) throw std::domain_error("at least one end is required");
    if (2 * genus - 2 + k <= 0)
        throw std::domain_error("2*genus - 2 + k must be positive");
    TheoremVerdict v;
    v.rhs = Rational(k, 2 * genus - 2 + k);
    v.rhs.canonicalize();
    v.applicable = nu_g > 2 && nu_g_star > 2;
    if (!v.applicable) {
        v.holds = true;  // nothing to check; reported as not applicable
        return v;
    }
    v.lhs = Rational(1) / (nu_g - Rational(2)) + Rational(1) / (nu_g_star - Rational(2));
    v.lhs.canonicalize();
    v.holds = v.lhs >= v.rhs;
    return v;
}

FeasibilityReport corollary_feasibility(int genus, int d_exceptional_g, int d_exceptional_gs,
                                        std::optional<int> k)
{
    if (genus != 0 && genus != 1) throw std::domain_error("genus must be 0 or 1");
    FeasibilityReport rep;
    const int p = d_exceptional_g, q = d_exceptional_gs;
    if (genus == 0 && p >= 4 && q >= 4) {
        rep.feasible = false;
        rep.note = "no complete flat front of genus 0 admits 4+ exceptional values on both maps";
        return rep;
    }
    if (genus == 1 && p >= 5 && q >= 5) {
        rep.feasible = false;
        rep.note = "no complete flat front of genus 1 admits 5+ exceptional values on both maps";
        return rep;
    }
    if (genus == 0 && p == 3 && q == 3) {
        rep.requires_k_at_least_4 = true;
        rep.note = "genus 0 with three exceptional values on both maps forces k >= 4";
        if (k && *k < 4) {
            rep.feasible = false;
            rep.note += " (violated by the supplied k)";
        }
        return rep;
    }
    if (genus == 1 && p == 4 && q == 4) {
        rep.requires_embedded_ends = true;
        rep.note =
            "genus 1 with four exceptional values on both maps forces d + d* = k, i.e. all "
            "ends regular and embedded";
        return rep;
    }
    rep.note = "no obstruction derived";
    return rep;
}

}  // namespace flatfront
