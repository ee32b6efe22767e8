// Full analysis pipeline and the AnalysisReport JSON serialization.
#pragma once

#include "flatfront/catalog.hpp"
#include "flatfront/elliptic.hpp"
#include "flatfront/front.hpp"
#include "flatfront/mesh.hpp"
#include "flatfront/valuedist.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace flatfront {

struct AnalysisOutcome {
    // Shared echo
    std::string gauss_source;
    std::string gauss_star_source;
    double scale = 1.0;
    int genus = 0;

    // Genus-0 pipeline
    std::optional<FrontSpec> spec;
    PeriodReport period;
    FrontConditionResult front_cond;
    std::optional<CanonicalData> canonical;
    std::vector<EndRecord> end_records;
    OssermanSummary osserman;
    std::optional<TRVReport> trv_gauss;
    std::optional<TRVReport> trv_gauss_star;
    std::optional<TheoremVerdict> theorem22;

    // Genus-1 pipeline
    std::optional<TorusAnalysis> torus;

    bool period_ok() const { return genus == 0 ? period.verdict : torus->period.verdict; }
};

AnalysisOutcome analyze_front(const FrontSpec& spec, const std::string& gauss_source,
                              const std::string& gauss_star_source);
AnalysisOutcome analyze_torus_entry(double scale);

// Catalog driver (full pipeline; elliptic entry dispatches to the torus path).
AnalysisOutcome run_catalog(const std::string& name, const ParamBindings& overrides = {},
                            double scale = 1.0);

// ---- serialization ---------------------------------------------------------

// 17 significant digits, locale-free.
std::string fmt17(double v);

nlohmann::ordered_json report_json(const AnalysisOutcome& outcome);

nlohmann::ordered_json mesh_sidecar_json(const Mesh& mesh, const AnalysisOutcome& outcome,
                                         const MeshPlan& plan, bool numeric_backend);

}  // namespace flatfront
