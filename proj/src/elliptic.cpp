#include "flatfront/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace flatfront {

namespace {

constexpr int kLatticeTerms = 12;
const double kPi = 3.14159265358979323846;

std::complex<double> csq(std::complex<double> v) { return v * v; }

double lattice_distance(std::complex<double> z, std::complex<double> p)
{
    std::complex<double> d = z - p;
    double dx = d.real() - std::round(d.real());
    double dy = d.imag() - std::round(d.imag());
    return std::hypot(dx, dy);
}

double segment_point_distance(std::complex<double> a, std::complex<double> b,
                              std::complex<double> p)
{
    std::complex<double> ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double segment_clearance(std::complex<double> a, std::complex<double> b,
                         const std::vector<std::complex<double>>& pts)
{
    double best = 1e30;
    int mx0 = static_cast<int>(std::floor(std::min(a.real(), b.real()))) - 1;
    int mx1 = static_cast<int>(std::ceil(std::max(a.real(), b.real()))) + 1;
    int my0 = static_cast<int>(std::floor(std::min(a.imag(), b.imag()))) - 1;
    int my1 = static_cast<int>(std::ceil(std::max(a.imag(), b.imag()))) + 1;
    for (const auto& p : pts)
        for (int m = mx0; m <= mx1; ++m)
            for (int n = my0; n <= my1; ++n)
                best = std::min(best,
                                segment_point_distance(a, b, p + std::complex<double>(m, n)));
    return best;
}

// Adaptive Simpson for a real integrand on [0,1].
double adaptive_simpson(const std::function<double(double)>& f, double s0, double s1, double f0,
                        double fm, double f1, double tol, int depth)
{
    double sm = 0.5 * (s0 + s1);
    double flm = f(0.5 * (s0 + sm));
    double frm = f(0.5 * (sm + s1));
    double whole = (s1 - s0) / 6.0 * (f0 + 4.0 * fm + f1);
    double left = (sm - s0) / 6.0 * (f0 + 4.0 * flm + fm);
    double right = (s1 - sm) / 6.0 * (fm + 4.0 * frm + f1);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, s0, sm, f0, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, sm, s1, fm, frm, f1, 0.5 * tol, depth - 1);
}

double integrate_real(const std::function<double(double)>& f, double tol = 1e-10)
{
    return adaptive_simpson(f, 0.0, 1.0, f(0.0), f(0.5), f(1.0), tol, 24);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double tol = 1e-10)
{
    double re = integrate_real([&](double s) { return f(s).real(); }, tol);
    double im = integrate_real([&](double s) { return f(s).imag(); }, tol);
    return {re, im};
}

}  // namespace

SquareTorus::SquareTorus()
{
    a_ = 1.0;  // placeholder so wp_pair can run; a_ only enters derived maps
    std::complex<double> wp_half, wpp_half;
    wp_pair(std::complex<double>(0.5, 0.0), wp_half, wpp_half);
    a_ = wp_half.real();
}

std::complex<double> SquareTorus::reduce(std::complex<double> z)
{
    double x = z.real() - std::round(z.real());
    double y = z.imag() - std::round(z.imag());
    std::complex<double> r(x, y);
    if (std::abs(r) < 1e-12) throw std::domain_error("wp evaluated at a lattice point");
    return r;
}

std::complex<double> SquareTorus::reduce_unit(std::complex<double> z)
{
    double x = z.real() - std::floor(z.real());
    double y = z.imag() - std::floor(z.imag());
    return {x, y};
}

void SquareTorus::wp_pair(std::complex<double> z, std::complex<double>& wp,
                          std::complex<double>& wpp) const
{
    // Row-summed lattice series: each row of the lattice contributes a
    // 1/sin^2 term, converging like exp(-2 pi n).
    std::complex<double> zr = reduce(z);
    std::complex<double> s = std::sin(kPi * zr);
    std::complex<double> c = std::cos(kPi * zr);
    std::complex<double> acc_p = 1.0 / csq(s) - 1.0 / 3.0;
    std::complex<double> acc_dp = c / (csq(s) * s);
    for (int n = 1; n <= kLatticeTerms; ++n) {
        std::complex<double> up(zr.real(), zr.imag() - n);
        std::complex<double> dn(zr.real(), zr.imag() + n);
        std::complex<double> su = std::sin(kPi * up), cu = std::cos(kPi * up);
        std::complex<double> sd = std::sin(kPi * dn), cd = std::cos(kPi * dn);
        double sh = std::sinh(kPi * n);
        acc_p += 1.0 / csq(su) + 1.0 / csq(sd) + 2.0 / (sh * sh);
        acc_dp += cu / (csq(su) * su) + cd / (csq(sd) * sd);
    }
    wp = kPi * kPi * acc_p;
    wpp = -2.0 * kPi * kPi * kPi * acc_dp;
}

std::complex<double> SquareTorus::wp(std::complex<double> z) const
{
    std::complex<double> p, dp;
    wp_pair(z, p, dp);
    return p;
}

std::complex<double> SquareTorus::wp_prime(std::complex<double> z) const
{
    std::complex<double> p, dp;
    wp_pair(z, p, dp);
    return dp;
}

std::vector<std::complex<double>> SquareTorus::solve_wp(std::complex<double> w) const
{
    std::vector<std::complex<double>> found;
    const int grid = 12;
    for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid; ++j) {
            std::complex<double> z(double(i) / grid, double(j) / grid);
            bool ok = true;
            for (int it = 0; it < 60; ++it) {
                std::complex<double> p, dp;
                try {
                    wp_pair(z, p, dp);
                } catch (const std::domain_error&) {
                    ok = false;
                    break;
                }
                if (std::abs(dp) < 1e-9) {
                    ok = false;
                    break;
                }
                std::complex<double> step = (p - w) / dp;
                z -= step;
                if (std::abs(step) < 1e-14) break;
            }
            if (!ok) continue;
            std::complex<double> p, dp;
            try {
                wp_pair(z, p, dp);
            } catch (const std::domain_error&) {
                continue;
            }
            if (std::abs(p - w) > 1e-9 * (1.0 + std::abs(w))) continue;
            z = reduce_unit(z);
            bool dup = false;
            for (const auto& f : found)
                if (lattice_distance(z, f) < 1e-6) dup = true;
            if (!dup) found.push_back(z);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return found;
}

TorusFront::TorusFront(double scale) : scale_(scale)
{
    if (scale_ <= 0.0 || !std::isfinite(scale_))
        throw std::domain_error("scale |c| must be a positive real");
    const double a = torus_.half_period_value();
    ends_.push_back({0.5, 0.5});  // the double zero of wp
    for (double sign : {1.0, -1.0}) {
        auto sols = torus_.solve_wp(std::complex<double>(0.0, sign * a));
        if (sols.size() != 2)
            throw std::runtime_error("unexpected preimage count for wp = +-ia");
        for (const auto& s : sols) ends_.push_back(s);
    }
    if (ends_.size() != 5) throw std::runtime_error("expected exactly 5 torus ends");

    exclusion_ = ends_;
    exclusion_.push_back({0.0, 0.0});  // pole of both maps
    exclusion_.push_back({0.5, 0.0});  // poles of G*
    exclusion_.push_back({0.0, 0.5});

    const std::complex<double> candidates[] = {
        {0.23, 0.17}, {0.13, 0.37}, {0.31, 0.11}, {0.41, 0.29}, {0.19, 0.43}};
    for (const auto& c : candidates) {
        double clear = 1e30;
        for (const auto& p : exclusion_) clear = std::min(clear, lattice_distance(c, p));
        if (clear > 0.11) {
            base_point_ = c;
            break;
        }
    }
    if (base_point_ == std::complex<double>(0.0, 0.0))
        throw std::runtime_error("no usable base point for path integration");
}

std::complex<double> TorusFront::gauss(std::complex<double> z) const
{
    std::complex<double> p, dp;
    torus_.wp_pair(z, p, dp);
    return dp / p;
}

std::complex<double> TorusFront::gauss_star(std::complex<double> z) const
{
    std::complex<double> p, dp;
    torus_.wp_pair(z, p, dp);
    double a = torus_.half_period_value();
    return 2.0 * (p * p - 3.0 * a * a) / dp;
}

std::complex<double> TorusFront::dgauss(std::complex<double> z) const
{
    std::complex<double> p, dp;
    torus_.wp_pair(z, p, dp);
    double a = torus_.half_period_value();
    return 2.0 * (p * p + a * a) / p;
}

std::complex<double> TorusFront::dgauss_star(std::complex<double> z) const
{
    std::complex<double> p, dp;
    torus_.wp_pair(z, p, dp);
    double a2 = torus_.half_period_value() * torus_.half_period_value();
    std::complex<double> p2 = p * p;
    return 4.0 * (p2 * p2 + 6.0 * a2 * p2 - 3.0 * a2 * a2) / (dp * dp);
}

std::complex<double> TorusFront::eta(std::complex<double> z) const
{
    std::complex<double> p, dp;
    torus_.wp_pair(z, p, dp);
    double a = torus_.half_period_value();
    std::complex<double> g = dp / p;
    std::complex<double> gs = 2.0 * (p * p - 3.0 * a * a) / dp;
    return (2.0 * (p * p + a * a) / p) / (g - gs);
}

std::complex<double> TorusFront::hopf(std::complex<double> z) const
{
    std::complex<double> g = gauss(z), gs = gauss_star(z);
    return -dgauss(z) * dgauss_star(z) / csq(g - gs);
}

double TorusFront::integrate_re_eta(std::complex<double> from, std::complex<double> to,
                                    int depth) const
{
    if (std::abs(to - from) < 1e-15) return 0.0;
    double clearance = segment_clearance(from, to, exclusion_);
    // Near an endpoint the required clearance shrinks with the endpoint's own
    // distance: a radial approach to a point just outside an exclusion disk
    // is still an integrable path.
    double end_clear = std::min(segment_clearance(from, from, exclusion_),
                                segment_clearance(to, to, exclusion_));
    double needed = std::min(0.055, 0.45 * end_clear);
    if (end_clear < 1e-6)
        throw std::runtime_error("integration endpoint sits on the torus exclusion set");
    if (clearance < needed) {
        if (depth <= 0)
            throw std::runtime_error(
                "integration contour too close to a zero/pole of the torus data");
        // Detour through the better of two perpendicular offsets.
        std::complex<double> mid = 0.5 * (from + to);
        std::complex<double> dir = (to - from) / std::abs(to - from);
        std::complex<double> normal(-dir.imag(), dir.real());
        double h = std::max(0.16, 0.5 * std::abs(to - from));
        std::complex<double> w1 = mid + h * normal;
        std::complex<double> w2 = mid - h * normal;
        double c1 = std::min(segment_clearance(from, w1, exclusion_),
                             segment_clearance(w1, to, exclusion_));
        double c2 = std::min(segment_clearance(from, w2, exclusion_),
                             segment_clearance(w2, to, exclusion_));
        std::complex<double> w = c1 >= c2 ? w1 : w2;
        return integrate_re_eta(from, w, depth - 1) + integrate_re_eta(w, to, depth - 1);
    }
    std::complex<double> delta = to - from;
    return integrate_real(
        [&](double s) { return (eta(from + s * delta) * delta).real(); }, 2e-9);
}

double TorusFront::log_xi_sq(std::complex<double> z) const
{
    // Meshing asks for L twice per node (frame and |rho|); memoize the last
    // answer per thread.
    thread_local std::complex<double> last_z{1e300, 1e300};
    thread_local const TorusFront* last_front = nullptr;
    thread_local double last_l = 0.0;
    if (last_front == this && z == last_z) return last_l;
    last_l = 2.0 * std::log(scale_) + 2.0 * integrate_re_eta(base_point_, z, 10);
    last_z = z;
    last_front = this;
    return last_l;
}

void TorusFront::frame(std::complex<double> z, double t, HermitianPoint& f_t,
                       HermitianPoint& nu_t) const
{
    double u = std::exp(log_xi_sq(z));
    HermitianPoint f, nu;
    gauss_frame_from_values(gauss(z), gauss_star(z), u, f, nu);
    double ch = std::cosh(t), sh = std::sinh(t);
    f_t = HermitianPoint::combine(ch, f, sh, nu);
    nu_t = HermitianPoint::combine(ch, nu, sh, f);
}

double TorusFront::log_rho_abs(std::complex<double> z) const
{
    double l = log_xi_sq(z);
    return 2.0 * l + std::log(std::abs(dgauss_star(z))) - std::log(std::abs(dgauss(z))) -
           2.0 * std::log(std::abs(gauss(z) - gauss_star(z)));
}

TorusPeriodReport TorusFront::period_check(int identity_samples) const
{
    TorusPeriodReport rep;
    // Offsets with maximal clearance from the exclusion set, per direction.
    auto pick_offset = [&](bool horizontal) {
        double best = -1.0, best_v = 0.25;
        for (double v : {0.213, 0.267, 0.331, 0.387, 0.123, 0.443}) {
            double clear = 1e30;
            for (const auto& p : exclusion_) {
                double coord = horizontal ? p.imag() : p.real();
                double d = std::fabs(v - coord);
                d = std::min(d, 1.0 - d);
                clear = std::min(clear, d);
            }
            if (clear > best) {
                best = clear;
                best_v = v;
            }
        }
        return best_v;
    };
    double y0 = pick_offset(true);
    double x0 = pick_offset(false);
    std::complex<double> base_h(0.0131, y0);
    std::complex<double> base_v(x0, 0.0097);
    rep.cycle_integrals[0] =
        integrate_complex([&](double s) { return eta(base_h + s); }, 1e-11);
    rep.cycle_integrals[1] = integrate_complex(
        [&](double s) { return eta(base_v + std::complex<double>(0.0, s)) *
                               std::complex<double>(0.0, 1.0); },
        1e-11);
    for (int k = 0; k < 2; ++k) {
        double n = std::round(rep.cycle_integrals[k].imag() / (2.0 * kPi));
        rep.distance_to_2pii[k] =
            std::abs(rep.cycle_integrals[k] - std::complex<double>(0.0, 2.0 * kPi * n));
    }
    rep.verdict = rep.distance_to_2pii[0] < 1e-6 && rep.distance_to_2pii[1] < 1e-6;

    std::mt19937_64 rng(20130521);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    rep.identity_residual = 0.0;
    int done = 0;
    while (done < identity_samples) {
        std::complex<double> z(unif(rng), unif(rng));
        double clear = 1e30;
        for (const auto& p : exclusion_) clear = std::min(clear, lattice_distance(z, p));
        if (clear < 0.05) continue;
        std::complex<double> p, dp;
        torus_.wp_pair(z, p, dp);
        std::complex<double> ref = dp / p;  // d log wp
        double resid = std::abs(eta(z) - ref) / (1.0 + std::abs(ref));
        rep.identity_residual = std::max(rep.identity_residual, resid);
        ++done;
    }
    return rep;
}

double TorusFront::winding_count(
    const std::function<std::complex<double>(std::complex<double>)>& fn, std::complex<double> w,
    int& zeros, int& poles) const
{
    const std::complex<double> offsets[] = {
        {-0.0137, -0.0071}, {0.0231, -0.0149}, {-0.0317, 0.0211}, {0.0433, 0.0359}};
    const int cells = 12;
    for (const auto& off : offsets) {
        bool failed = false;
        int zero_acc = 0, pole_acc = 0;
        double max_dev = 0.0;
        for (int cj = 0; cj < cells && !failed; ++cj) {
            for (int ci = 0; ci < cells && !failed; ++ci) {
                std::complex<double> corner =
                    off + std::complex<double>(double(ci) / cells, double(cj) / cells);
                const double h = 1.0 / cells;
                std::complex<double> quad[4] = {corner, corner + std::complex<double>(h, 0),
                                                corner + std::complex<double>(h, h),
                                                corner + std::complex<double>(0, h)};
                double total = 0.0;
                for (int e = 0; e < 4 && !failed; ++e) {
                    std::complex<double> a = quad[e], b = quad[(e + 1) % 4];
                    int n = 16;
                    while (true) {
                        double darg = 0.0;
                        bool refine = false;
                        std::complex<double> prev = fn(a) - w;
                        for (int s = 1; s <= n; ++s) {
                            std::complex<double> zpt = a + (b - a) * (double(s) / n);
                            std::complex<double> v = fn(zpt) - w;
                            if (std::abs(v) < 1e-9 * (1.0 + std::abs(w)) ||
                                !std::isfinite(v.real())) {
                                refine = true;
                                break;
                            }
                            double step = std::arg(v / prev);
                            if (std::fabs(step) > 2.2) {
                                refine = true;
                                break;
                            }
                            darg += step;
                            prev = v;
                        }
                        if (!refine) {
                            total += darg;
                            break;
                        }
                        n *= 2;
                        if (n > 8192) {
                            failed = true;
                            break;
                        }
                    }
                }
                if (failed) break;
                double winding = total / (2.0 * kPi);
                int rounded = static_cast<int>(std::lround(winding));
                max_dev = std::max(max_dev, std::fabs(winding - rounded));
                if (std::fabs(winding - rounded) > 0.05) {
                    failed = true;
                    break;
                }
                if (rounded > 0)
                    zero_acc += rounded;
                else
                    pole_acc -= rounded;
            }
        }
        if (!failed) {
            zeros = zero_acc;
            poles = pole_acc;
            return max_dev;
        }
    }
    throw std::runtime_error("argument-principle winding failed on every grid offset");
}

int TorusFront::stable_degree(
    const std::function<std::complex<double>(std::complex<double>)>& fn, int probes,
    unsigned seed) const
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.7, 2.6);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    int agreed = -1;
    int produced = 0;
    int attempts = 0;
    while (produced < probes && attempts < probes * 6) {
        ++attempts;
        std::complex<double> w = std::polar(mag(rng), ang(rng));
        int zeros = 0, poles = 0;
        try {
            winding_count(fn, w, zeros, poles);
        } catch (const std::runtime_error&) {
            continue;  // probe too close to a critical value; resample
        }
        if (zeros != poles) continue;  // inconsistent probe, resample
        if (agreed < 0) agreed = zeros;
        if (zeros != agreed)
            throw std::runtime_error("preimage counts disagree across probe values");
        ++produced;
    }
    if (produced < probes)
        throw std::runtime_error("could not collect enough stable degree probes");
    return agreed;
}

int TorusFront::degree_gauss(int probes) const
{
    return stable_degree([this](std::complex<double> z) { return gauss(z); }, probes, 4243u);
}

int TorusFront::degree_gauss_star(int probes) const
{
    return stable_degree([this](std::complex<double> z) { return gauss_star(z); }, probes,
                         90125u);
}

int TorusFront::hopf_order_at_end(std::complex<double> end) const
{
    for (double r : {2e-3, 5e-4}) {
        double avg1 = 0.0, avg2 = 0.0;
        const int dirs = 16;
        for (int k = 0; k < dirs; ++k) {
            double theta = 2.0 * kPi * (k + 0.37) / dirs;
            avg1 += std::log(std::abs(hopf(end + std::polar(r, theta))));
            avg2 += std::log(std::abs(hopf(end + std::polar(0.5 * r, theta))));
        }
        avg1 /= dirs;
        avg2 /= dirs;
        double slope = (avg1 - avg2) / std::log(2.0);
        int rounded = static_cast<int>(std::lround(slope));
        if (std::fabs(slope - rounded) < 0.2) return rounded;
    }
    throw std::runtime_error("Hopf order slope fit did not stabilize");
}

TorusAnalysis analyze_torus(const TorusFront& front)
{
    TorusAnalysis out;
    out.a = front.a();
    out.ends = front.ends();
    out.period = front.period_check();

    // Branch sets: dG = 0 at wp = +-ia; dG* = 0 at wp^2 = a^2(-3 +- 2 sqrt 3).
    const SquareTorus& torus = front.torus();
    double a = front.a();
    std::vector<std::complex<double>> branch_g;
    for (double sign : {1.0, -1.0})
        for (const auto& z : torus.solve_wp(std::complex<double>(0.0, sign * a)))
            branch_g.push_back(z);
    std::vector<std::complex<double>> branch_gs;
    double s3 = std::sqrt(3.0);
    for (std::complex<double> target :
         {std::complex<double>(a * std::sqrt(2.0 * s3 - 3.0), 0.0),
          std::complex<double>(-a * std::sqrt(2.0 * s3 - 3.0), 0.0),
          std::complex<double>(0.0, a * std::sqrt(3.0 + 2.0 * s3)),
          std::complex<double>(0.0, -a * std::sqrt(3.0 + 2.0 * s3))})
        for (const auto& z : torus.solve_wp(target)) branch_gs.push_back(z);
    double sep = 1e30;
    for (const auto& p : branch_g)
        for (const auto& q : branch_gs) sep = std::min(sep, lattice_distance(p, q));
    out.branch_separation = sep;
    out.front_condition_holds = sep > 1e-3;

    for (const auto& e : out.ends) out.hopf_orders.push_back(front.hopf_order_at_end(e));

    out.osserman.deg_gauss = front.degree_gauss();
    out.osserman.deg_gauss_star = front.degree_gauss_star();
    out.osserman.end_count = static_cast<int>(out.ends.size());
    int total = out.osserman.deg_gauss + out.osserman.deg_gauss_star;
    out.osserman.inequality_holds = total >= out.osserman.end_count;
    out.osserman.equality = total == out.osserman.end_count;
    out.osserman.all_ends_embedded = out.osserman.equality;
    return out;
}

bool TorusMeshBackend::frame(std::complex<double> z, double t, HermitianPoint& f,
                             HermitianPoint& nu) const
{
    try {
        front_.frame(z, t, f, nu);
    } catch (const std::exception&) {
        return false;
    }
    return std::isfinite(f.h11) && std::isfinite(f.h22) && std::isfinite(f.h12.real()) &&
           std::isfinite(f.h12.imag());
}

std::vector<std::complex<double>> TorusMeshBackend::exclusion_points() const
{
    std::vector<std::complex<double>> out;
    for (const auto& p : front_.exclusion_points())
        for (int m = -2; m <= 3; ++m)
            for (int n = -2; n <= 3; ++n) out.push_back(p + std::complex<double>(m, n));
    return out;
}

}  // namespace flatfront
