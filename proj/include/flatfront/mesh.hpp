// Grid-sampled meshes of a front in the Poincare ball, the singular-locus
// extractor, and ASCII OBJ export.
#pragma once

#include "flatfront/front.hpp"
#include "flatfront/marching.hpp"

#include <functional>
#include <iosfwd>

namespace flatfront {

struct Window {
    double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diameter() const;
    void require_valid() const;
};

// Abstract geometry source so the exact-rational and numeric-torus pipelines
// share the mesh generator.
class MeshBackend {
public:
    virtual ~MeshBackend() = default;
    // False when z is not evaluable (too close to a pole/end).
    virtual bool frame(std::complex<double> z, double t, HermitianPoint& f,
                       HermitianPoint& nu) const = 0;
    virtual double log_rho_abs(std::complex<double> z) const = 0;
    virtual std::vector<std::complex<double>> exclusion_points() const = 0;
    virtual bool backend_is_numeric() const = 0;
};

class RationalMeshBackend : public MeshBackend {
public:
    explicit RationalMeshBackend(const FrontSpec& spec) : ev_(spec) {}
    bool frame(std::complex<double> z, double t, HermitianPoint& f,
               HermitianPoint& nu) const override;
    double log_rho_abs(std::complex<double> z) const override { return ev_.log_rho_abs(z); }
    std::vector<std::complex<double>> exclusion_points() const override;
    bool backend_is_numeric() const override { return false; }
    const FrontEvaluator& evaluator() const { return ev_; }

private:
    FrontEvaluator ev_;
};

struct MeshPlan {
    enum class Kind { Window, Annulus };
    Kind kind = Kind::Window;
    Window window;                       // Window plans
    double r_inner = 0.1, r_outer = 4.0; // Annulus plans (log-spaced radii, full turn)
    std::complex<double> center{0.0, 0.0};
    int resolution = 256;     // nodes per side
    double exclusion_factor = 0.01;  // exclusion radius = factor * window diameter
};

struct Mesh {
    std::vector<std::array<double, 3>> vertices;  // Poincare ball points
    std::vector<std::array<int, 3>> faces;        // 0-based
    std::vector<double> rho_abs;                  // per-vertex |rho|
    std::vector<std::vector<int>> polylines;      // singular curves, 0-based vertex chains
    double t = 0.0;
};

struct SingularLocus {
    bool degenerate = false;  // |rho| == 1 on the whole window
    std::vector<std::vector<std::complex<double>>> curves;  // parameter-plane polylines
};

// Marching squares on log|rho|^2 = 0 over the plan's grid; cells touching
// exclusion disks are skipped.
SingularLocus singular_locus(const MeshBackend& backend, const MeshPlan& plan);

Mesh build_mesh(const MeshBackend& backend, const MeshPlan& plan, double t);

// "v x y z" / "f i j k" / polylines as "l ..." elements.
void write_obj(const Mesh& mesh, std::ostream& out);

}  // namespace flatfront
