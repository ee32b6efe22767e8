// Double-precision polynomial helpers: evaluation, Durand-Kerner root
// finding, Newton polishing, multiplicity clustering. Shared by the hybrid
// root finder and by the test-side brute-force oracles.
#pragma once

#include <complex>
#include <vector>

namespace flatfront {

using CPoly = std::vector<std::complex<double>>;  // coeffs[k] multiplies z^k

void cpoly_trim(CPoly& p, double tol_rel = 1e-13);
std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> z);
CPoly cpoly_derivative(const CPoly& p);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
CPoly cpoly_sub(const CPoly& a, const CPoly& b);

// Largest coefficient magnitude (0 for empty).
double cpoly_scale(const CPoly& p);

// All roots of p (degree >= 1 after trimming) via Durand-Kerner with a
// deterministic start configuration; unclustered, length = degree. Throws
// when the iteration budget is exhausted before convergence.
std::vector<std::complex<double>> durand_kerner(const CPoly& p, double tol = 1e-13,
                                                int max_iter = 1000);

// Newton refinement on p from start z (a handful of steps, returns final z).
std::complex<double> newton_polish(const CPoly& p, const CPoly& dp, std::complex<double> z,
                                   int steps = 50);

struct ClusteredRoot {
    std::complex<double> value;  // cluster centroid
    int multiplicity;
};

// Greedy clustering of a root multiset with merge radius `radius`.
std::vector<ClusteredRoot> cluster_roots(std::vector<std::complex<double>> roots, double radius);

}  // namespace flatfront
