// Built-in catalog of fronts with pinned expected results.
#pragma once

#include "flatfront/expr.hpp"
#include "flatfront/front.hpp"

#include <functional>
#include <string>
#include <vector>

namespace flatfront {

struct CatalogFixture {
    // Exact expectations at the entry's default parameters; empty fields are
    // not asserted for the entry.
    std::vector<std::pair<std::string, std::string>> residues;  // pole -> residue
    std::vector<std::pair<std::string, int>> hopf_orders;       // end -> ord Q
    int deg_gauss = 0;
    int deg_gauss_star = 0;
    int end_count = 0;
    bool osserman_equality = false;
    bool embedded = false;
    std::string nu_gauss;       // exact "p/q", empty when not asserted
    std::string nu_gauss_star;
    std::string note;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string gauss_source;
    std::string gauss_star_source;
    ParamBindings default_params;
    bool elliptic = false;
    // Throws std::domain_error when a parameter leaves the entry's domain.
    std::function<void(const ParamBindings&)> validate;
    CatalogFixture fixture;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_catalog_entry(const std::string& name);

// Merged (defaults + overrides, overrides win) and validated bindings.
ParamBindings catalog_bindings(const CatalogEntry& entry, const ParamBindings& overrides);

// Rational entries only; throws for the elliptic entry.
FrontSpec catalog_spec(const CatalogEntry& entry, const ParamBindings& overrides,
                       double scale = 1.0);

}  // namespace flatfront
