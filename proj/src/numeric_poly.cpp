#include "flatfront/numeric_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flatfront {

void cpoly_trim(CPoly& p, double tol_rel)
{
    double scale = cpoly_scale(p);
    while (!p.empty() && std::abs(p.back()) <= tol_rel * scale) p.pop_back();
}

std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> z)
{
    std::complex<double> acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPoly cpoly_derivative(const CPoly& p)
{
    if (p.size() <= 1) return {};
    CPoly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * double(k);
    return d;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b)
{
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, {0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CPoly cpoly_sub(const CPoly& a, const CPoly& b)
{
    CPoly r(std::max(a.size(), b.size()), {0.0, 0.0});
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::complex<double> av = k < a.size() ? a[k] : 0.0;
        std::complex<double> bv = k < b.size() ? b[k] : 0.0;
        r[k] = av - bv;
    }
    return r;
}

double cpoly_scale(const CPoly& p)
{
    double s = 0.0;
    for (const auto& c : p) s = std::max(s, std::abs(c));
    return s;
}

std::vector<std::complex<double>> durand_kerner(const CPoly& input, double tol, int max_iter)
{
    CPoly p = input;
    cpoly_trim(p);
    if (p.size() < 2) throw std::domain_error("root finding on a constant polynomial");
    const std::size_t n = p.size() - 1;
    // Monic normalization.
    CPoly m(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) m[k] = p[k] / p.back();
    // Cauchy-style radius bound.
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(m[k]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * double(i) / double(n) + 0.3971;
        w[i] = std::polar(0.5 + 0.5 * radius, ang);
    }
    for (int iter = 0; iter < max_iter; ++iter) {
        double step_max = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                denom *= (w[i] - w[j]);
            }
            std::complex<double> delta = cpoly_eval(m, w[i]) / denom;
            w[i] -= delta;
            step_max = std::max(step_max, std::abs(delta) / std::max(1.0, std::abs(w[i])));
        }
        if (step_max < tol) return w;
    }
    // Multiple roots stall the contraction; accept if residuals are small.
    double scale = std::max(1.0, cpoly_scale(m));
    for (const auto& z : w) {
        double zpow = std::pow(std::max(1.0, std::abs(z)), double(n));
        if (std::abs(cpoly_eval(m, z)) > 1e-6 * scale * zpow)
            throw std::runtime_error("root finding did not converge (iteration budget exhausted)");
    }
    return w;
}

std::complex<double> newton_polish(const CPoly& p, const CPoly& dp, std::complex<double> z,
                                   int steps)
{
    for (int k = 0; k < steps; ++k) {
        std::complex<double> f = cpoly_eval(p, z);
        std::complex<double> d = cpoly_eval(dp, z);
        if (std::abs(d) == 0.0) break;
        std::complex<double> delta = f / d;
        z -= delta;
        if (std::abs(delta) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

std::vector<ClusteredRoot> cluster_roots(std::vector<std::complex<double>> roots, double radius)
{
    std::vector<ClusteredRoot> out;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::complex<double> sum = roots[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(roots[j] - sum / double(count)) <= radius) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        out.push_back({sum / double(count), count});
    }
    return out;
}

}  // namespace flatfront
