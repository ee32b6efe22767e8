#include "flatfront/report.hpp"

#include <cstdio>
#include <limits>

namespace flatfront {

using nlohmann::ordered_json;

AnalysisOutcome analyze_front(const FrontSpec& spec, const std::string& gauss_source,
                              const std::string& gauss_star_source)
{
    AnalysisOutcome out;
    out.gauss_source = gauss_source;
    out.gauss_star_source = gauss_star_source;
    out.scale = spec.scale();
    out.genus = 0;
    out.spec = spec;
    out.period = period_check(spec);
    out.front_cond = front_condition(spec.gauss(), spec.gauss_star());
    out.canonical = canonical_data(spec);
    out.end_records = classify_ends(spec);
    out.osserman = osserman_summary(spec);
    const int k = static_cast<int>(spec.ends().size());
    if (!spec.gauss().is_constant()) out.trv_gauss = totally_ramified(spec.gauss(), spec.ends());
    if (!spec.gauss_star().is_constant())
        out.trv_gauss_star = totally_ramified(spec.gauss_star(), spec.ends());
    if (out.trv_gauss && out.trv_gauss_star && 2 * spec.genus() - 2 + k > 0)
        out.theorem22 =
            verify_main_theorem(out.trv_gauss->nu, out.trv_gauss_star->nu, spec.genus(), k);
    return out;
}

AnalysisOutcome analyze_torus_entry(double scale)
{
    AnalysisOutcome out;
    const CatalogEntry& entry = find_catalog_entry("k3-torus");
    out.gauss_source = entry.gauss_source;
    out.gauss_star_source = entry.gauss_star_source;
    out.scale = scale;
    out.genus = 1;
    TorusFront front(scale);
    out.torus = analyze_torus(front);
    return out;
}

AnalysisOutcome run_catalog(const std::string& name, const ParamBindings& overrides,
                            double scale)
{
    const CatalogEntry& entry = find_catalog_entry(name);
    if (entry.elliptic) {
        catalog_bindings(entry, overrides);  // validates (no parameters today)
        return analyze_torus_entry(scale);
    }
    FrontSpec spec = catalog_spec(entry, overrides, scale);
    return analyze_front(spec, entry.gauss_source, entry.gauss_star_source);
}

std::string fmt17(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string complex17(std::complex<double> v)
{
    if (v.imag() == 0.0) return fmt17(v.real());
    char buf[112];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17g*i", v.real(), v.imag());
    return buf;
}

std::string point_str(const ExtendedPoint& p)
{
    if (p.is_infinity()) return "inf";
    if (p.is_exact()) return gaussian_to_string(p.exact_value());
    return complex17(p.to_complex());
}

std::string scalar_str(const HybridScalar& s)
{
    return s.exact ? gaussian_to_string(s.exact_value) : complex17(s.approx);
}

std::string rational_str(const Rational& r) { return rational_to_string(r); }

ordered_json ord_value(int ord)
{
    if (ord == std::numeric_limits<int>::max()) return "inf";
    return ord;
}

ordered_json trv_json(const TRVReport& rep, int genus, int k)
{
    ordered_json j;
    ordered_json exc = ordered_json::array();
    ordered_json ram = ordered_json::array();
    for (const auto& v : rep.values) {
        if (v.exceptional) {
            ordered_json e;
            e["value"] = point_str(v.value);
            e["exact"] = v.exact;
            ordered_json fiber = ordered_json::array();
            for (const auto& fp : v.fiber) {
                ordered_json f;
                f["point"] = point_str(fp.point);
                f["multiplicity"] = fp.multiplicity;
                fiber.push_back(std::move(f));
            }
            e["puncture_preimages"] = std::move(fiber);
            exc.push_back(std::move(e));
        } else {
            ordered_json r;
            r["value"] = point_str(v.value);
            r["nu_i"] = v.min_multiplicity;
            r["exact"] = v.exact;
            ram.push_back(std::move(r));
        }
    }
    j["exceptional"] = std::move(exc);
    j["ramified"] = std::move(ram);
    j["r0"] = rep.r0;
    j["l0"] = rep.l0;
    j["nu"] = rational_str(rep.nu);
    ordered_json bounds;
    bounds["rh"] = rep.riemann_hurwitz_holds;
    bounds["trvn1"] = rep.per_map_bound_holds(genus, k);
    bounds["ex_rami"] = rep.exceptional_bound_holds(k);
    j["bounds"] = std::move(bounds);
    return j;
}

ordered_json theorem22_json(const std::optional<TheoremVerdict>& v)
{
    ordered_json j;
    if (!v) {
        j["applicable"] = false;
        j["reason"] = "needs both maps nonconstant and 2*genus-2+k > 0";
        return j;
    }
    j["applicable"] = v->applicable;
    if (v->applicable) {
        j["lhs"] = rational_str(v->lhs);
        j["rhs"] = rational_str(v->rhs);
    } else {
        j["rhs"] = rational_str(v->rhs);
    }
    j["holds"] = v->holds;
    return j;
}

ordered_json rational_report_json(const AnalysisOutcome& o)
{
    const FrontSpec& spec = *o.spec;
    ordered_json j;
    ordered_json spec_j;
    spec_j["gauss"] = o.gauss_source;
    spec_j["gauss_star"] = o.gauss_star_source;
    spec_j["gauss_reduced"] = spec.gauss().to_string();
    spec_j["gauss_star_reduced"] = spec.gauss_star().to_string();
    spec_j["scale"] = fmt17(o.scale);
    spec_j["genus"] = 0;
    ordered_json ends_list = ordered_json::array();
    for (const auto& e : spec.ends()) ends_list.push_back(point_str(e));
    spec_j["ends"] = std::move(ends_list);
    j["spec"] = std::move(spec_j);

    ordered_json ends = ordered_json::array();
    for (const auto& rec : o.end_records) {
        ordered_json e;
        e["point"] = point_str(rec.point);
        e["ord_Q"] = ord_value(rec.ord_hopf);
        e["regular"] = rec.regular;
        e["complete_pole_criterion"] = rec.complete_pole_criterion;
        e["G_value"] = point_str(rec.gauss_value);
        e["Gstar_value"] = point_str(rec.gauss_star_value);
        e["values_agree"] = rec.values_agree;
        ends.push_back(std::move(e));
    }
    j["ends"] = std::move(ends);

    ordered_json period;
    ordered_json poles = ordered_json::array();
    for (const auto& p : o.period.poles) {
        ordered_json pj;
        pj["location"] = point_str(p.location);
        pj["order"] = p.order;
        pj["residue"] = scalar_str(p.residue_value);
        pj["residue_real"] = p.residue_real;
        pj["exact"] = p.residue_value.exact;
        poles.push_back(std::move(pj));
    }
    period["poles"] = std::move(poles);
    period["verdict"] = o.period.verdict;
    period["justification"] = o.period.justification;
    j["period"] = std::move(period);

    ordered_json fc;
    fc["holds"] = o.front_cond.holds;
    fc["witness"] =
        o.front_cond.witness ? ordered_json(point_str(*o.front_cond.witness)) : ordered_json();
    fc["horosphere"] = o.front_cond.horosphere;
    j["front_condition"] = std::move(fc);

    ordered_json canon;
    canon["Q"] = o.canonical->hopf.to_string();
    canon["omega_rational"] = o.canonical->omega_rational.to_string();
    canon["theta_rational"] = o.canonical->theta_rational.to_string();
    ordered_json ordq = ordered_json::array();
    for (const auto& rec : o.end_records) {
        ordered_json q;
        q["end"] = point_str(rec.point);
        q["ord"] = ord_value(rec.ord_hopf);
        ordq.push_back(std::move(q));
    }
    canon["ordQ"] = std::move(ordq);
    j["canonical"] = std::move(canon);

    ordered_json degrees;
    degrees["d"] = o.osserman.deg_gauss;
    degrees["dstar"] = o.osserman.deg_gauss_star;
    degrees["k"] = o.osserman.end_count;
    j["degrees"] = std::move(degrees);

    ordered_json oss;
    oss["holds"] = o.osserman.inequality_holds;
    oss["equality"] = o.osserman.equality;
    oss["embedded"] = o.osserman.all_ends_embedded;
    j["osserman"] = std::move(oss);

    ordered_json vd;
    const int k = o.osserman.end_count;
    vd["G"] = o.trv_gauss ? trv_json(*o.trv_gauss, 0, k)
                          : ordered_json("constant map: not analyzed");
    vd["Gstar"] = o.trv_gauss_star ? trv_json(*o.trv_gauss_star, 0, k)
                                   : ordered_json("constant map: not analyzed");
    vd["theorem22"] = theorem22_json(o.theorem22);
    j["valuedist"] = std::move(vd);
    return j;
}

ordered_json torus_report_json(const AnalysisOutcome& o)
{
    const TorusAnalysis& t = *o.torus;
    ordered_json j;
    ordered_json spec_j;
    spec_j["gauss"] = o.gauss_source;
    spec_j["gauss_star"] = o.gauss_star_source;
    spec_j["scale"] = fmt17(o.scale);
    spec_j["genus"] = 1;
    spec_j["lattice"] = "Z + i*Z";
    spec_j["a"] = fmt17(t.a);
    ordered_json ends_list = ordered_json::array();
    for (const auto& e : t.ends) ends_list.push_back(complex17(e));
    spec_j["ends"] = std::move(ends_list);
    j["spec"] = std::move(spec_j);

    ordered_json ends = ordered_json::array();
    for (std::size_t i = 0; i < t.ends.size(); ++i) {
        ordered_json e;
        e["point"] = complex17(t.ends[i]);
        e["ord_Q"] = t.hopf_orders[i];
        e["regular"] = t.hopf_orders[i] >= -2;
        e["complete_pole_criterion"] = t.hopf_orders[i] <= -1;
        ends.push_back(std::move(e));
    }
    j["ends"] = std::move(ends);

    ordered_json period;
    ordered_json cycles = ordered_json::array();
    for (int c = 0; c < 2; ++c) {
        ordered_json cj;
        cj["integral"] = complex17(t.period.cycle_integrals[c]);
        cj["distance_to_2pii"] = fmt17(t.period.distance_to_2pii[c]);
        cycles.push_back(std::move(cj));
    }
    period["cycles"] = std::move(cycles);
    period["log_derivative_identity_residual"] = fmt17(t.period.identity_residual);
    period["verdict"] = t.period.verdict;
    j["period"] = std::move(period);

    ordered_json fc;
    fc["holds"] = t.front_condition_holds;
    fc["branch_separation"] = fmt17(t.branch_separation);
    fc["horosphere"] = false;
    j["front_condition"] = std::move(fc);

    ordered_json canon;
    canon["Q"] = "-2*(wp^4+6*a^2*wp^2-3*a^4)/(wp*(wp^2+a^2))";
    j["canonical"] = std::move(canon);

    ordered_json degrees;
    degrees["d"] = t.osserman.deg_gauss;
    degrees["dstar"] = t.osserman.deg_gauss_star;
    degrees["k"] = t.osserman.end_count;
    j["degrees"] = std::move(degrees);

    ordered_json oss;
    oss["holds"] = t.osserman.inequality_holds;
    oss["equality"] = t.osserman.equality;
    oss["embedded"] = t.osserman.all_ends_embedded;
    j["osserman"] = std::move(oss);

    j["valuedist"] = "non-rational input - out of engine scope";
    j["backend"] = "numeric";
    return j;
}

}  // namespace

ordered_json report_json(const AnalysisOutcome& outcome)
{
    return outcome.genus == 0 ? rational_report_json(outcome) : torus_report_json(outcome);
}

ordered_json mesh_sidecar_json(const Mesh& mesh, const AnalysisOutcome& outcome,
                               const MeshPlan& plan, bool numeric_backend)
{
    ordered_json j;
    ordered_json spec_j;
    spec_j["gauss"] = outcome.gauss_source;
    spec_j["gauss_star"] = outcome.gauss_star_source;
    spec_j["scale"] = fmt17(outcome.scale);
    spec_j["genus"] = outcome.genus;
    j["spec"] = std::move(spec_j);
    j["t"] = fmt17(mesh.t);
    j["backend"] = numeric_backend ? "numeric" : "exact";
    if (plan.kind == MeshPlan::Kind::Window) {
        j["window"] = {fmt17(plan.window.x0), fmt17(plan.window.x1), fmt17(plan.window.y0),
                       fmt17(plan.window.y1)};
    } else {
        j["annulus"] = {fmt17(plan.r_inner), fmt17(plan.r_outer)};
        j["center"] = complex17(plan.center);
    }
    j["resolution"] = plan.resolution;
    j["vertex_count"] = mesh.vertices.size();
    j["face_count"] = mesh.faces.size();
    j["singular_polyline_count"] = mesh.polylines.size();
    ordered_json rho = ordered_json::array();
    for (double r : mesh.rho_abs) rho.push_back(fmt17(r));
    j["rho"] = std::move(rho);
    return j;
}

}  // namespace flatfront
