#include "flatfront/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace flatfront {

double Window::diameter() const { return std::hypot(width(), height()); }

void Window::require_valid() const
{
    if (!(x1 > x0) || !(y1 > y0)) throw std::domain_error("degenerate window");
}

bool RationalMeshBackend::frame(std::complex<double> z, double t, HermitianPoint& f,
                                HermitianPoint& nu) const
{
    try {
        ev_.frame(z, t, f, nu);
    } catch (const std::domain_error&) {
        return false;
    }
    return std::isfinite(f.h11) && std::isfinite(f.h22) && std::isfinite(f.h12.real()) &&
           std::isfinite(f.h12.imag());
}

std::vector<std::complex<double>> RationalMeshBackend::exclusion_points() const
{
    std::vector<std::complex<double>> pts;
    for (const auto& p : ev_.exclusion_points())
        if (p.is_finite()) pts.push_back(p.to_complex());
    return pts;
}

namespace {

struct GridGeometry {
    int n;  // nodes per side
    MeshPlan plan;

    std::complex<double> node(double i, double j) const
    {
        if (plan.kind == MeshPlan::Kind::Window) {
            double x = plan.window.x0 + plan.window.width() * i / (n - 1);
            double y = plan.window.y0 + plan.window.height() * j / (n - 1);
            return {x, y};
        }
        double r = plan.r_inner * std::pow(plan.r_outer / plan.r_inner, i / (n - 1));
        double ang = 2.0 * M_PI * j / (n - 1);
        return plan.center + std::polar(r, ang);
    }
    double exclusion_radius() const
    {
        if (plan.kind == MeshPlan::Kind::Window)
            return plan.exclusion_factor * plan.window.diameter();
        return plan.exclusion_factor * 2.0 * plan.r_outer;
    }
};

bool near_exclusion(std::complex<double> z, const std::vector<std::complex<double>>& pts,
                    double radius)
{
    for (const auto& p : pts)
        if (std::abs(z - p) < radius) return true;
    return false;
}

}  // namespace

SingularLocus singular_locus(const MeshBackend& backend, const MeshPlan& plan)
{
    if (plan.kind == MeshPlan::Kind::Window) plan.window.require_valid();
    if (plan.resolution < 4) throw std::domain_error("resolution too small");
    SingularLocus out;

    GridGeometry geom{plan.resolution, plan};
    const auto exclusion = backend.exclusion_points();
    const double radius = geom.exclusion_radius();

    GridField field;
    field.nx = field.ny = plan.resolution;
    field.values.assign(static_cast<std::size_t>(plan.resolution) * plan.resolution,
                        std::nan(""));
    int finite_nodes = 0, flat_nodes = 0;
    for (int j = 0; j < plan.resolution; ++j) {
        for (int i = 0; i < plan.resolution; ++i) {
            std::complex<double> z = geom.node(i, j);
            if (near_exclusion(z, exclusion, radius)) continue;
            double phi = 2.0 * backend.log_rho_abs(z);  // log |rho|^2
            if (!std::isfinite(phi)) continue;
            field.values[static_cast<std::size_t>(j) * plan.resolution + i] = phi;
            ++finite_nodes;
            if (std::fabs(phi) < 1e-8) ++flat_nodes;
        }
    }
    if (finite_nodes > 0 && flat_nodes >= (9 * finite_nodes) / 10) {
        out.degenerate = true;
        return out;
    }
    for (const auto& line : marching_squares(field, 0.0)) {
        std::vector<std::complex<double>> curve;
        curve.reserve(line.size());
        for (const auto& p : line) curve.push_back(geom.node(p[0], p[1]));
        out.curves.push_back(std::move(curve));
    }
    return out;
}

Mesh build_mesh(const MeshBackend& backend, const MeshPlan& plan, double t)
{
    if (plan.kind == MeshPlan::Kind::Window) plan.window.require_valid();
    if (plan.resolution < 2) throw std::domain_error("resolution too small");

    GridGeometry geom{plan.resolution, plan};
    const auto exclusion = backend.exclusion_points();
    const double radius = geom.exclusion_radius();
    const int n = plan.resolution;

    // Sampling is embarrassingly parallel over grid nodes; results land in
    // per-node slots so the assembly below stays deterministic.
    struct NodeSample {
        bool valid = false;
        std::array<double, 3> ball{0, 0, 0};
        double rho = 0.0;
    };
    std::vector<NodeSample> nodes(static_cast<std::size_t>(n) * n);
    auto sample_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            for (int i = 0; i < n; ++i) {
                std::complex<double> z = geom.node(i, j);
                if (near_exclusion(z, exclusion, radius)) continue;
                HermitianPoint f, nu;
                if (!backend.frame(z, t, f, nu)) continue;
                NodeSample& slot = nodes[static_cast<std::size_t>(j) * n + i];
                slot.valid = true;
                slot.ball = f.ball_point();
                slot.rho = std::exp(backend.log_rho_abs(z));
            }
        }
    };
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(n));
    if (workers > 1) {
        std::vector<std::thread> pool;
        int chunk = (n + static_cast<int>(workers) - 1) / static_cast<int>(workers);
        for (unsigned w = 0; w < workers; ++w) {
            int b = static_cast<int>(w) * chunk;
            int e = std::min(n, b + chunk);
            if (b < e) pool.emplace_back(sample_rows, b, e);
        }
        for (auto& th : pool) th.join();
    } else {
        sample_rows(0, n);
    }

    Mesh mesh;
    mesh.t = t;
    std::vector<int> vertex_index(static_cast<std::size_t>(n) * n, -1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const NodeSample& slot = nodes[static_cast<std::size_t>(j) * n + i];
            if (!slot.valid) continue;
            vertex_index[static_cast<std::size_t>(j) * n + i] =
                static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back(slot.ball);
            mesh.rho_abs.push_back(slot.rho);
        }
    }
    if (mesh.vertices.empty()) throw std::runtime_error("empty sample set");
    auto idx = [&](int i, int j) { return vertex_index[static_cast<std::size_t>(j) * n + i]; };
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i + 1 < n; ++i) {
            int v00 = idx(i, j), v10 = idx(i + 1, j), v01 = idx(i, j + 1),
                v11 = idx(i + 1, j + 1);
            if (v00 < 0 || v10 < 0 || v01 < 0 || v11 < 0) continue;
            mesh.faces.push_back({v00, v10, v11});
            mesh.faces.push_back({v00, v11, v01});
        }
    }

    // Embed the singular curves as extra vertices + line elements.
    SingularLocus locus = singular_locus(backend, plan);
    if (!locus.degenerate) {
        for (const auto& curve : locus.curves) {
            std::vector<int> chain;
            for (const auto& z : curve) {
                HermitianPoint f, nu;
                if (!backend.frame(z, t, f, nu)) continue;
                chain.push_back(static_cast<int>(mesh.vertices.size()));
                mesh.vertices.push_back(f.ball_point());
                mesh.rho_abs.push_back(1.0);  // on the |rho| = 1 level set
            }
            if (chain.size() >= 2) mesh.polylines.push_back(std::move(chain));
        }
    }
    return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out)
{
    char buf[160];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        out << buf;
    }
    for (const auto& f : mesh.faces) {
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    }
    for (const auto& line : mesh.polylines) {
        out << "l";
        for (int v : line) out << ' ' << v + 1;
        out << '\n';
    }
}

}  // namespace flatfront
