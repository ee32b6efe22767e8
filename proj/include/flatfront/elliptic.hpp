// Numeric Weierstrass kernel on the square torus C/(Z + iZ) and the
// genus-1 catalog front G = wp'/wp, G* = 2(wp^2 - 3a^2)/wp'.
#pragma once

#include "flatfront/front.hpp"
#include "flatfront/mesh.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace flatfront {

class SquareTorus {
public:
    SquareTorus();

    // a = wp(1/2); the cubic is (wp')^2 = 4 wp (wp^2 - a^2).
    double half_period_value() const { return a_; }
    double g2() const { return 4.0 * a_ * a_; }

    void wp_pair(std::complex<double> z, std::complex<double>& wp,
                 std::complex<double>& wpp) const;
    std::complex<double> wp(std::complex<double> z) const;
    std::complex<double> wp_prime(std::complex<double> z) const;

    // Representative in the centered cell [-1/2,1/2)^2; throws on lattice points.
    static std::complex<double> reduce(std::complex<double> z);
    // Representative in [0,1)^2.
    static std::complex<double> reduce_unit(std::complex<double> z);

    // All solutions of wp(z) = w in the fundamental square (two for finite w
    // away from the critical values; Newton-based).
    std::vector<std::complex<double>> solve_wp(std::complex<double> w) const;

private:
    double a_ = 0.0;
};

struct TorusPeriodReport {
    std::array<std::complex<double>, 2> cycle_integrals;  // horizontal, vertical
    std::array<double, 2> distance_to_2pii;               // to the nearest 2*pi*i*n
    bool verdict = false;
    double identity_residual = 0.0;  // max |dG/(G-G*) - wp'/wp| over samples
};

class TorusFront {
public:
    explicit TorusFront(double scale = 1.0);

    const SquareTorus& torus() const { return torus_; }
    double scale() const { return scale_; }
    double a() const { return torus_.half_period_value(); }

    std::complex<double> gauss(std::complex<double> z) const;
    std::complex<double> gauss_star(std::complex<double> z) const;
    std::complex<double> dgauss(std::complex<double> z) const;       // 2(wp^2+a^2)/wp
    std::complex<double> dgauss_star(std::complex<double> z) const;  // 4(wp^4+6a^2wp^2-3a^4)/wp'^2
    std::complex<double> eta(std::complex<double> z) const;          // dG/(G - G*)
    std::complex<double> hopf(std::complex<double> z) const;         // -dG dG* / (G-G*)^2

    // Five ends {wp (wp^2 + a^2) = 0} as points of [0,1)^2.
    const std::vector<std::complex<double>>& ends() const { return ends_; }
    // Ends plus the poles of the Gauss maps (lattice point and half-periods).
    const std::vector<std::complex<double>>& exclusion_points() const { return exclusion_; }

    // Numeric path integration of 2 Re eta from a fixed base point, with
    // detours around the exclusion set; L(z) = 2 log|c| + that integral.
    double log_xi_sq(std::complex<double> z) const;

    void frame(std::complex<double> z, double t, HermitianPoint& f, HermitianPoint& nu) const;
    double log_rho_abs(std::complex<double> z) const;

    TorusPeriodReport period_check(int identity_samples = 100) const;

    // Preimage counts by subdivided argument-principle winding over the
    // fundamental square, stable across `probes` regular values.
    int degree_gauss(int probes = 5) const;
    int degree_gauss_star(int probes = 5) const;

    // Quadratic-differential order of the Hopf coefficient at an end, by
    // log-log slope fit on shrinking circles.
    int hopf_order_at_end(std::complex<double> end) const;

private:
    double winding_count(const std::function<std::complex<double>(std::complex<double>)>& fn,
                         std::complex<double> w, int& zeros, int& poles) const;
    int stable_degree(const std::function<std::complex<double>(std::complex<double>)>& fn,
                      int probes, unsigned seed) const;
    double integrate_re_eta(std::complex<double> from, std::complex<double> to, int depth) const;

    SquareTorus torus_;
    double scale_;
    std::vector<std::complex<double>> ends_;
    std::vector<std::complex<double>> exclusion_;
    std::complex<double> base_point_{0.0, 0.0};
};

struct TorusOssermanVerdict {
    int deg_gauss = 0;
    int deg_gauss_star = 0;
    int end_count = 0;
    bool inequality_holds = false;
    bool equality = false;
    bool all_ends_embedded = false;
};

struct TorusAnalysis {
    double a = 0.0;
    std::vector<std::complex<double>> ends;
    TorusPeriodReport period;
    bool front_condition_holds = false;
    double branch_separation = 0.0;  // min distance between the two branch sets
    std::vector<int> hopf_orders;    // per end, same order as ends
    TorusOssermanVerdict osserman;
};

TorusAnalysis analyze_torus(const TorusFront& front);

class TorusMeshBackend : public MeshBackend {
public:
    explicit TorusMeshBackend(const TorusFront& front) : front_(front) {}
    bool frame(std::complex<double> z, double t, HermitianPoint& f,
               HermitianPoint& nu) const override;
    double log_rho_abs(std::complex<double> z) const override
    {
        return front_.log_rho_abs(z);
    }
    std::vector<std::complex<double>> exclusion_points() const override;
    bool backend_is_numeric() const override { return true; }

private:
    const TorusFront& front_;
};

}  // namespace flatfront
