// Value distribution of a Gauss map on a punctured sphere: exceptional
// values, totally ramified values, the weighted count nu, the main
// ramification inequality, and the corollary case analysis.
#pragma once

#include "flatfront/sphere.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flatfront {

struct FiberPoint {
    ExtendedPoint point;
    int multiplicity;
    bool in_ends;
};

struct TotallyRamifiedValue {
    ExtendedPoint value;
    bool exact;
    bool exceptional;     // no preimage outside the ends
    int min_multiplicity;  // nu_i >= 2 for non-exceptional entries; 0 marks infinity
    std::vector<FiberPoint> fiber;
};

struct TRVReport {
    int degree = 0;
    int r0 = 0;  // exceptional values
    int l0 = 0;  // non-exceptional totally ramified values
    int branching_exceptional = 0;  // n0
    int branching_ramified = 0;     // nr
    int branching_total = 0;        // nG = 2(d + genus - 1) on the sphere
    Rational nu;                    // r0 + sum(1 - 1/nu_i), exact
    std::vector<TotallyRamifiedValue> values;  // exceptional first, then ramified

    // Proof-chain bounds, evaluated on the analyzed data.
    bool riemann_hurwitz_holds = false;        // nG == 2(d-1)
    bool exceptional_bound_holds(int k) const  // k >= d*r0 - n0
    {
        return k >= degree * r0 - branching_exceptional;
    }
    bool per_map_bound_holds(int genus, int k) const;  // nu <= 2 + (2g-2+k)/d
};

std::vector<ExtendedPoint> exceptional_values(const RationalMap& g,
                                              const std::vector<ExtendedPoint>& ends,
                                              double tol = 1e-12);

TRVReport totally_ramified(const RationalMap& g, const std::vector<ExtendedPoint>& ends,
                           double tol = 1e-12);

struct TheoremVerdict {
    bool applicable = false;  // nu_G > 2 and nu_G* > 2
    Rational lhs;             // 1/(nu_G - 2) + 1/(nu_G* - 2), when applicable
    Rational rhs;             // k / (2*genus - 2 + k)
    bool holds = false;       // lhs >= rhs (true whenever not applicable is reported separately)
};

TheoremVerdict verify_main_theorem(const Rational& nu_g, const Rational& nu_g_star, int genus,
                                   int k);

struct FeasibilityReport {
    bool feasible = true;
    bool requires_k_at_least_4 = false;    // genus 0, D_G = D_G* = 3
    bool requires_embedded_ends = false;   // genus 1, D_G = D_G* = 4
    std::string note;
};

FeasibilityReport corollary_feasibility(int genus, int d_exceptional_g, int d_exceptional_gs,
                                        std::optional<int> k = std::nullopt);

}  // namespace flatfront
