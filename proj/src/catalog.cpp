#include "flatfront/catalog.hpp"

#include <stdexcept>

namespace flatfront {

namespace {

void require_real(const ParamBindings& b, const std::string& name)
{
    auto it = b.find(name);
    if (it == b.end()) throw std::domain_error("missing parameter '" + name + "'");
    if (!it->second.is_real())
        throw std::domain_error("parameter '" + name + "' must be real");
}

std::vector<CatalogEntry> build_entries()
{
    std::vector<CatalogEntry> entries;

    {
        CatalogEntry e;
        e.name = "revolution";
        e.summary = "rotationally symmetric family G = z, G* = alpha*z (horosphere at alpha = 0)";
        e.gauss_source = "z";
        e.gauss_star_source = "alpha*z";
        e.default_params = {{"alpha", parse_constant("1/3")}};
        e.validate = [](const ParamBindings& b) {
            require_real(b, "alpha");
            if (b.at("alpha") == GaussianRational(1))
                throw std::domain_error("alpha = 1 collapses G and G*");
        };
        e.fixture.deg_gauss = 1;
        e.fixture.deg_gauss_star = 1;
        e.fixture.end_count = 2;
        e.fixture.osserman_equality = true;
        e.fixture.embedded = true;
        e.fixture.nu_gauss = "2";       // omitted values 0 and infinity
        e.fixture.nu_gauss_star = "2";
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "kuy-z-z2";
        e.summary = "three regular embedded ends, G = z, G* = z^2";
        e.gauss_source = "z";
        e.gauss_star_source = "z^2";
        e.fixture.deg_gauss = 1;
        e.fixture.deg_gauss_star = 2;
        e.fixture.end_count = 3;
        e.fixture.osserman_equality = true;
        e.fixture.embedded = true;
        e.fixture.nu_gauss = "3";        // 0, 1, infinity all omitted
        e.fixture.nu_gauss_star = "2";   // 0 and infinity omitted for z^2... see note
        e.fixture.note =
            "for G* = z^2 with ends {0,1,inf}: omitted values 0, inf; the value 1 keeps the "
            "unbranched preimage -1 in M, so nu_G* = 2";
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k1-four-ends";
        e.summary = "four regular embedded ends, G = z^2, G* = z(z+a)/(az+1)";
        e.gauss_source = "z^2";
        e.gauss_star_source = "(z*(z+a))/(a*z+1)";
        e.default_params = {{"a", parse_constant("2")}};
        e.validate = [](const ParamBindings& b) {
            require_real(b, "a");
            const GaussianRational& a = b.at("a");
            if (a == GaussianRational(0) || a == GaussianRational(1) ||
                a == GaussianRational(-1))
                throw std::domain_error("parameter a must be real with a not in {0, 1, -1}");
        };
        // Expectations at a = 2.
        e.fixture.residues = {{"1", "3/2"}, {"-1", "1/2"}, {"inf", "-2"}};
        e.fixture.hopf_orders = {{"0", -1}, {"1", -2}, {"-1", -2}, {"inf", -1}};
        e.fixture.deg_gauss = 2;
        e.fixture.deg_gauss_star = 2;
        e.fixture.end_count = 4;
        e.fixture.osserman_equality = true;
        e.fixture.embedded = true;
        e.fixture.nu_gauss = "3";
        e.fixture.nu_gauss_star = "2";
        e.fixture.note =
            "the omitted value of G* is the one with fiber {+1,-1} inside the end set; z = -a "
            "stays in M, so the value 0 is attained";
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k2-five-ends";
        e.summary = "five regular embedded ends, G = z^3, G* = z(z+6)/(2z+5)";
        e.gauss_source = "z^3";
        e.gauss_star_source = "(z*(z+6))/(2*z+5)";
        e.fixture.residues = {{"1", "7/5"}, {"-2", "-2"}, {"-3/2", "18/5"}, {"inf", "-3"}};
        e.fixture.hopf_orders = {{"0", 0}, {"1", -2}, {"-2", -2}, {"-3/2", -2}, {"inf", 0}};
        e.fixture.deg_gauss = 3;
        e.fixture.deg_gauss_star = 2;
        e.fixture.end_count = 5;
        e.fixture.osserman_equality = true;
        e.fixture.embedded = true;
        e.fixture.nu_gauss = "2";
        e.fixture.nu_gauss_star = "1";
        e.fixture.note =
            "nu_G = 2: only 0 and infinity are omitted (fibers of the other end values keep "
            "simple points in M); the Hopf quadratic factor expands to z^2+5*z+15";
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k3-torus";
        e.summary = "square-torus front G = wp'/wp, G* = 2(wp^2-3a^2)/wp', five regular ends";
        e.gauss_source = "wpp/wp";
        e.gauss_star_source = "2*(wp^2-3*a^2)/wpp";
        e.elliptic = true;
        e.fixture.deg_gauss = 2;
        e.fixture.deg_gauss_star = 4;
        e.fixture.end_count = 5;
        e.fixture.osserman_equality = false;
        e.fixture.embedded = false;
        e.fixture.note = "d + d* = 6 > k = 5: the ends cannot all be embedded";
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& find_catalog_entry(const std::string& name)
{
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    throw std::domain_error("unknown catalog entry '" + name + "'");
}

ParamBindings catalog_bindings(const CatalogEntry& entry, const ParamBindings& overrides)
{
    ParamBindings merged = entry.default_params;
    for (const auto& [k, v] : overrides) merged[k] = v;
    if (entry.validate) entry.validate(merged);
    return merged;
}

FrontSpec catalog_spec(const CatalogEntry& entry, const ParamBindings& overrides, double scale)
{
    if (entry.elliptic)
        throw std::domain_error("entry '" + entry.name + "' uses the numeric torus pipeline");
    ParamBindings bindings = catalog_bindings(entry, overrides);
    FunctionExpr g = parse_function(entry.gauss_source, bindings);
    FunctionExpr gs = parse_function(entry.gauss_star_source, bindings);
    return FrontSpec(*g.rational, *gs.rational, scale);
}

}  // namespace flatfront
