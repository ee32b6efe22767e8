#include "flatfront/cli.hpp"

#include "flatfront/report.hpp"

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

namespace flatfront {

namespace {

ParamBindings parse_params(const std::vector<std::string>& raw)
{
    ParamBindings out;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::domain_error("--param expects name=value, got '" + item + "'");
        out[item.substr(0, eq)] = parse_constant(item.substr(eq + 1));
    }
    return out;
}

std::vector<ExtendedPoint> parse_ends(const std::string& raw)
{
    std::vector<ExtendedPoint> out;
    std::stringstream ss(raw);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "inf" || tok == "Inf" || tok == "INF")
            out.push_back(ExtendedPoint::infinity());
        else
            out.push_back(ExtendedPoint::exact(parse_constant(tok)));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& raw, const char* what)
{
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::domain_error(std::string("malformed ") + what + " value '" + tok + "'");
        }
    }
    return out;
}

void emit_report(const AnalysisOutcome& outcome, const std::string& json_path)
{
    std::string text = report_json(outcome).dump(2);
    text += "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + json_path + "' for writing");
        f << text;
    }
}

int finish_analysis(const AnalysisOutcome& outcome, const std::string& json_path)
{
    emit_report(outcome, json_path);
    if (!outcome.period_ok()) {
        std::cerr << "period condition failed: a residue of dG/(G-G*) is not real; "
                     "the representation formula does not produce a single-valued front "
                     "(diagnostic report written)\n";
        return 3;
    }
    return 0;
}

struct MeshArgs {
    std::string catalog_name;
    std::string gauss, gauss_star;
    std::vector<std::string> params;
    double scale = 1.0;
    std::string window_arg;
    std::string annulus_arg;
    std::string t_arg = "0";
    int resolution = 256;
    double exclusion = 0.01;
    std::string out_path = "front";
};

int run_mesh(const MeshArgs& args)
{
    MeshPlan plan;
    if (!args.annulus_arg.empty()) {
        auto vals = parse_double_list(args.annulus_arg, "--annulus");
        if (vals.size() != 2 || vals[0] <= 0 || vals[1] <= vals[0])
            throw std::domain_error("--annulus expects r_inner,r_outer with 0 < r0 < r1");
        plan.kind = MeshPlan::Kind::Annulus;
        plan.r_inner = vals[0];
        plan.r_outer = vals[1];
    } else {
        auto vals = parse_double_list(args.window_arg.empty() ? "-2,2,-2,2" : args.window_arg,
                                      "--window");
        if (vals.size() != 4) throw std::domain_error("--window expects x0,x1,y0,y1");
        plan.window = {vals[0], vals[1], vals[2], vals[3]};
        plan.window.require_valid();
    }
    plan.resolution = args.resolution;
    plan.exclusion_factor = args.exclusion;
    std::vector<double> ts = parse_double_list(args.t_arg, "--t");
    if (ts.empty()) ts.push_back(0.0);

    AnalysisOutcome outcome;
    std::unique_ptr<MeshBackend> backend;
    std::unique_ptr<TorusFront> torus_front;
    std::optional<FrontSpec> rational_spec;
    if (!args.catalog_name.empty()) {
        const CatalogEntry& entry = find_catalog_entry(args.catalog_name);
        ParamBindings overrides = parse_params(args.params);
        if (entry.elliptic) {
            outcome = analyze_torus_entry(args.scale);
        } else {
            rational_spec = catalog_spec(entry, overrides, args.scale);
            outcome = analyze_front(*rational_spec, entry.gauss_source,
                                    entry.gauss_star_source);
        }
    } else {
        if (args.gauss.empty() || args.gauss_star.empty())
            throw std::domain_error("mesh needs --catalog or both --gauss and --gauss-star");
        ParamBindings bindings = parse_params(args.params);
        FunctionExpr g = parse_function(args.gauss, bindings);
        FunctionExpr gs = parse_function(args.gauss_star, bindings);
        if (g.is_elliptic() || gs.is_elliptic())
            throw std::domain_error("ad-hoc elliptic input is not supported; use the catalog");
        rational_spec.emplace(*g.rational, *gs.rational, args.scale);
        outcome = analyze_front(*rational_spec, args.gauss, args.gauss_star);
    }
    if (!outcome.period_ok()) {
        std::cerr << "period condition failed; refusing to mesh\n";
        return 3;
    }
    if (rational_spec) {
        backend = std::make_unique<RationalMeshBackend>(*rational_spec);
    } else {
        torus_front = std::make_unique<TorusFront>(args.scale);
        backend = std::make_unique<TorusMeshBackend>(*torus_front);
    }

    std::string base = args.out_path;
    if (base.size() > 4 && base.substr(base.size() - 4) == ".obj")
        base = base.substr(0, base.size() - 4);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Mesh mesh = build_mesh(*backend, plan, ts[i]);
        std::string stem = ts.size() == 1 ? base : base + "_t" + std::to_string(i);
        std::ofstream obj(stem + ".obj", std::ios::binary);
        if (!obj) throw std::runtime_error("cannot open '" + stem + ".obj' for writing");
        write_obj(mesh, obj);
        std::ofstream side(stem + ".json", std::ios::binary);
        if (!side) throw std::runtime_error("cannot open '" + stem + ".json' for writing");
        side << mesh_sidecar_json(mesh, outcome, plan, backend->backend_is_numeric()).dump(2)
             << "\n";
        std::cout << stem << ".obj " << stem << ".json\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"flat fronts in hyperbolic 3-space from pairs of hyperbolic Gauss maps"};
    app.require_subcommand(1);
    // key=value file with one [section] per subcommand, e.g. [analyze];
    // command-line flags take precedence over config values.
    app.set_config("--config");

    // catalog ----------------------------------------------------------------
    auto* cat = app.add_subcommand("catalog", "built-in examples");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list catalog entries");
    auto* cat_run = cat->add_subcommand("run", "run the full analysis of an entry");
    std::string cat_name;
    std::vector<std::string> cat_params;
    double cat_scale = 1.0;
    std::string cat_json;
    cat_run->add_option("name", cat_name, "entry name")->required();
    cat_run->add_option("--param", cat_params, "parameter override name=value");
    cat_run->add_option("--scale", cat_scale, "|c| (default 1)");
    cat_run->add_option("--json", cat_json, "write the report to a file");

    // analyze ----------------------------------------------------------------
    auto* an = app.add_subcommand("analyze", "analyze an ad-hoc pair of Gauss maps");
    std::string an_gauss, an_gauss_star, an_ends, an_json;
    std::vector<std::string> an_params;
    double an_scale = 1.0;
    an->add_option("--gauss", an_gauss, "expression for G")->required();
    an->add_option("--gauss-star", an_gauss_star, "expression for G*")->required();
    an->add_option("--param", an_params, "exact parameter binding name=value");
    an->add_option("--ends", an_ends, "extra ends, comma list ('inf' allowed)");
    an->add_option("--scale", an_scale, "|c| (default 1)");
    an->add_option("--json", an_json, "write the report to a file");

    // mesh -------------------------------------------------------------------
    auto* me = app.add_subcommand("mesh", "sample a front into OBJ + JSON sidecar");
    MeshArgs margs;
    me->add_option("--catalog", margs.catalog_name, "catalog entry to mesh");
    me->add_option("--gauss", margs.gauss, "expression for G");
    me->add_option("--gauss-star", margs.gauss_star, "expression for G*");
    me->add_option("--param", margs.params, "parameter binding name=value");
    me->add_option("--scale", margs.scale, "|c| (default 1)");
    me->add_option("--window", margs.window_arg, "x0,x1,y0,y1 (default -2,2,-2,2)");
    me->add_option("--annulus", margs.annulus_arg, "r_inner,r_outer sampling around 0");
    me->add_option("--resolution", margs.resolution, "nodes per side (default 256)");
    me->add_option("--exclusion", margs.exclusion,
                   "exclusion radius as a fraction of the window diameter (default 0.01)");
    me->add_option("--t", margs.t_arg, "parallel-front distances, comma list (default 0)");
    me->add_option("--out", margs.out_path, "output path stem (default 'front')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0
    }

    try {
        if (cat_list->parsed()) {
            for (const auto& e : catalog_entries())
                std::cout << e.name << "  -  " << e.summary << "\n";
            return 0;
        }
        if (cat_run->parsed()) {
            AnalysisOutcome outcome =
                run_catalog(cat_name, parse_params(cat_params), cat_scale);
            return finish_analysis(outcome, cat_json);
        }
        if (an->parsed()) {
            ParamBindings bindings = parse_params(an_params);
            FunctionExpr g = parse_function(an_gauss, bindings);
            FunctionExpr gs = parse_function(an_gauss_star, bindings);
            if (g.is_elliptic() || gs.is_elliptic())
                throw std::domain_error(
                    "wp/wpp expressions run on the torus pipeline: use 'catalog run k3-torus'");
            FrontSpec spec(*g.rational, *gs.rational, an_scale, parse_ends(an_ends));
            AnalysisOutcome outcome = analyze_front(spec, an_gauss, an_gauss_star);
            return finish_analysis(outcome, an_json);
        }
        if (me->parsed()) return run_mesh(margs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace flatfront
