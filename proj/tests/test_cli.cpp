#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatfront/cli.hpp"
#include "flatfront/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int cli(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"flatfront"};
    argv.insert(argv.end(), args.begin(), args.end());
    return flatfront::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("flatfront_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("catalog run produces the pinned k1 report")
{
    TempDir dir;
    std::string out = dir.file("k1.json");
    CHECK(cli({"catalog", "run", "k1-four-ends", "--json", out.c_str()}) == 0);
    json rep = json::parse(slurp(out));

    CHECK(rep["spec"]["genus"] == 0);
    CHECK(rep["spec"]["ends"].size() == 4);
    CHECK(rep["period"]["verdict"] == true);
    // Exact residue strings at (1, -1, inf).
    std::map<std::string, std::string> residues;
    for (const auto& p : rep["period"]["poles"])
        residues[p["location"]] = p["residue"];
    CHECK(residues.at("1") == "3/2");
    CHECK(residues.at("-1") == "1/2");
    CHECK(residues.at("inf") == "-2");
    CHECK(rep["front_condition"]["holds"] == true);
    CHECK(rep["degrees"]["d"] == 2);
    CHECK(rep["degrees"]["dstar"] == 2);
    CHECK(rep["degrees"]["k"] == 4);
    CHECK(rep["osserman"]["holds"] == true);
    CHECK(rep["osserman"]["equality"] == true);
    CHECK(rep["osserman"]["embedded"] == true);
    CHECK(rep["valuedist"]["G"]["nu"] == "3");
    CHECK(rep["valuedist"]["G"]["r0"] == 3);
    CHECK(rep["valuedist"]["G"]["l0"] == 0);
    CHECK(rep["valuedist"]["G"]["bounds"]["rh"] == true);
    CHECK(rep["valuedist"]["G"]["bounds"]["trvn1"] == true);
    CHECK(rep["valuedist"]["G"]["bounds"]["ex_rami"] == true);
    CHECK(rep["valuedist"]["Gstar"]["nu"] == "2");
    CHECK(rep["valuedist"]["Gstar"]["r0"] == 1);
    CHECK(rep["valuedist"]["Gstar"]["l0"] == 2);
    CHECK(rep["valuedist"]["Gstar"]["ramified"].size() == 2);
    for (const auto& rv : rep["valuedist"]["Gstar"]["ramified"])
        CHECK(rv["nu_i"] == 2);
    CHECK(rep["valuedist"]["theorem22"]["applicable"] == false);  // nu_G* = 2
    std::map<std::string, json> ords;
    for (const auto& q : rep["canonical"]["ordQ"]) ords[q["end"]] = q["ord"];
    CHECK(ords.at("0") == -1);
    CHECK(ords.at("1") == -2);
    CHECK(ords.at("-1") == -2);
    CHECK(ords.at("inf") == -1);
    for (const auto& e : rep["ends"]) {
        CHECK(e["regular"] == true);
        CHECK(e["complete_pole_criterion"] == true);
        CHECK(e["values_agree"] == true);
    }
}

TEST_CASE("reports are byte-identical across runs")
{
    TempDir dir;
    std::string a = dir.file("a.json"), b = dir.file("b.json");
    CHECK(cli({"catalog", "run", "k2-five-ends", "--json", a.c_str()}) == 0);
    CHECK(cli({"catalog", "run", "k2-five-ends", "--json", b.c_str()}) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("parameter domain violations exit with code 2")
{
    CHECK(cli({"catalog", "run", "k1-four-ends", "--param", "a=1"}) == 2);
    CHECK(cli({"catalog", "run", "k1-four-ends", "--param", "a=i"}) == 2);
    CHECK(cli({"catalog", "run", "no-such-entry"}) == 2);
    CHECK(cli({"analyze", "--gauss", "z", "--gauss-star", "z"}) == 2);
    CHECK(cli({"analyze", "--gauss", "2", "--gauss-star", "3"}) == 2);
    CHECK(cli({"analyze", "--gauss", "z+", "--gauss-star", "z"}) == 2);
    CHECK(cli({"analyze", "--gauss", "a*z", "--gauss-star", "z"}) == 2);  // unbound
    CHECK(cli({"analyze", "--gauss", "wpp/wp", "--gauss-star", "z"}) == 2);  // torus-only
}

TEST_CASE("horosphere entry sets the flag")
{
    TempDir dir;
    std::string out = dir.file("horo.json");
    CHECK(cli({"catalog", "run", "revolution", "--param", "alpha=0", "--json",
               out.c_str()}) == 0);
    json rep = json::parse(slurp(out));
    CHECK(rep["front_condition"]["horosphere"] == true);
    CHECK(rep["degrees"]["dstar"] == 0);
    CHECK(rep["valuedist"]["Gstar"].is_string());  // constant map: not analyzed
}

TEST_CASE("analyze: revolution-type input")
{
    TempDir dir;
    std::string out = dir.file("rev.json");
    CHECK(cli({"analyze", "--gauss", "z", "--gauss-star", "a*z", "--param", "a=2", "--json",
               out.c_str()}) == 0);
    json rep = json::parse(slurp(out));
    REQUIRE(rep["spec"]["ends"].size() == 2);
    CHECK(rep["spec"]["ends"][0] == "0");
    CHECK(rep["spec"]["ends"][1] == "inf");
    CHECK(rep["valuedist"]["G"]["r0"] == 2);      // D_G = 2
    CHECK(rep["valuedist"]["Gstar"]["r0"] == 2);  // D_G* = 2
}

TEST_CASE("analyze: period failure writes the diagnostic report and exits 3")
{
    TempDir dir;
    std::string out = dir.file("fail.json");
    CHECK(cli({"analyze", "--gauss", "z^2", "--gauss-star", "(z*(z+a))/(a*z+1)", "--param",
               "a=1+i", "--json", out.c_str()}) == 3);
    json rep = json::parse(slurp(out));
    CHECK(rep["period"]["verdict"] == false);
    bool found_offender = false;
    for (const auto& p : rep["period"]["poles"]) {
        if (p["location"] == "1") {
            CHECK(p["residue"] == "3/2-1/2*i");
            CHECK(p["residue_real"] == false);
            found_offender = true;
        }
    }
    CHECK(found_offender);
}

TEST_CASE("extra ends from the command line are honored")
{
    TempDir dir;
    std::string out = dir.file("extra.json");
    CHECK(cli({"analyze", "--gauss", "z", "--gauss-star", "z^2", "--ends", "5,inf", "--json",
               out.c_str()}) == 0);
    json rep = json::parse(slurp(out));
    CHECK(rep["spec"]["ends"].size() == 4);  // {0, 1, inf} plus 5
}

TEST_CASE("config file supplies defaults, flags win")
{
    TempDir dir;
    std::string cfg = dir.file("front.cfg");
    {
        std::ofstream f(cfg);
        f << "[analyze]\n";
        f << "gauss=z\n";
        f << "gauss-star=a*z\n";
        f << "param=a=2\n";
        f << "scale=2\n";
    }
    std::string out1 = dir.file("cfg1.json");
    CHECK(cli({"--config", cfg.c_str(), "analyze", "--json", out1.c_str()}) == 0);
    json rep1 = json::parse(slurp(out1));
    CHECK(rep1["spec"]["gauss"] == "z");
    CHECK(rep1["spec"]["scale"] == "2");

    std::string out2 = dir.file("cfg2.json");
    CHECK(cli({"--config", cfg.c_str(), "analyze", "--scale", "3", "--json",
               out2.c_str()}) == 0);
    json rep2 = json::parse(slurp(out2));
    CHECK(rep2["spec"]["scale"] == "3");
}

TEST_CASE("mesh command writes OBJ plus sidecar per t, deterministically")
{
    TempDir dir;
    std::string base = dir.file("k1mesh");
    CHECK(cli({"mesh", "--catalog", "k1-four-ends", "--window", "-2,2,-2,2", "--resolution",
               "48", "--t", "-0.3,0,0.3", "--out", base.c_str()}) == 0);
    for (int i = 0; i < 3; ++i) {
        std::string stem = base + "_t" + std::to_string(i);
        CHECK(fs::exists(stem + ".obj"));
        CHECK(fs::exists(stem + ".json"));
        json side = json::parse(slurp(stem + ".json"));
        CHECK(side["backend"] == "exact");
        CHECK(side["resolution"] == 48);
    }
    // rho is t-independent: identical arrays across the three sidecars.
    json s0 = json::parse(slurp(base + "_t0.json"));
    json s1 = json::parse(slurp(base + "_t1.json"));
    json s2 = json::parse(slurp(base + "_t2.json"));
    CHECK(s0["rho"] == s1["rho"]);
    CHECK(s1["rho"] == s2["rho"]);
    CHECK(s0["singular_polyline_count"] == s2["singular_polyline_count"]);

    // Determinism: a second identical invocation reproduces the bytes.
    std::string again = dir.file("k1mesh_again");
    CHECK(cli({"mesh", "--catalog", "k1-four-ends", "--window", "-2,2,-2,2", "--resolution",
               "48", "--t", "-0.3,0,0.3", "--out", again.c_str()}) == 0);
    CHECK(slurp(base + "_t1.obj") == slurp(again + "_t1.obj"));
}

TEST_CASE("annulus sampling of the horosphere stays inside the unit ball")
{
    TempDir dir;
    std::string base = dir.file("horo");
    CHECK(cli({"mesh", "--gauss", "z", "--gauss-star", "0", "--annulus", "0.05,8",
               "--resolution", "40", "--t", "0", "--out", base.c_str()}) == 0);
    std::istringstream obj(slurp(base + ".obj"));
    std::string tag;
    int vertices = 0;
    while (obj >> tag) {
        if (tag == "v") {
            double x, y, z;
            obj >> x >> y >> z;
            CHECK(x * x + y * y + z * z < 1.0);
            ++vertices;
        } else {
            obj.ignore(4096, '\n');
        }
    }
    CHECK(vertices > 500);
}

TEST_CASE("mesh refuses a failed period condition")
{
    TempDir dir;
    std::string base = dir.file("bad");
    CHECK(cli({"mesh", "--gauss", "z^2", "--gauss-star", "(z*(z+a))/(a*z+1)", "--param",
               "a=1+i", "--out", base.c_str()}) == 3);
    CHECK_FALSE(fs::exists(base + ".obj"));
}

TEST_CASE("torus catalog entry runs the numeric pipeline end to end")
{
    TempDir dir;
    std::string out = dir.file("k3.json");
    CHECK(cli({"catalog", "run", "k3-torus", "--json", out.c_str()}) == 0);
    json rep = json::parse(slurp(out));
    CHECK(rep["spec"]["genus"] == 1);
    CHECK(rep["degrees"]["d"] == 2);
    CHECK(rep["degrees"]["dstar"] == 4);
    CHECK(rep["degrees"]["k"] == 5);
    CHECK(rep["osserman"]["holds"] == true);
    CHECK(rep["osserman"]["equality"] == false);
    CHECK(rep["osserman"]["embedded"] == false);
    CHECK(rep["period"]["verdict"] == true);
    CHECK(rep["backend"] == "numeric");

    std::string base = dir.file("k3mesh");
    CHECK(cli({"mesh", "--catalog", "k3-torus", "--window", "0.08,0.42,0.08,0.42",
               "--resolution", "20", "--t", "0", "--out", base.c_str()}) == 0);
    json side = json::parse(slurp(base + ".json"));
    CHECK(side["backend"] == "numeric");
    CHECK(fs::exists(base + ".obj"));
}

TEST_CASE("catalog list names every entry")
{
    CHECK(cli({"catalog", "list"}) == 0);
}

TEST_CASE("every catalog entry reproduces its pinned fixture")
{
    using flatfront::catalog_entries;
    using flatfront::run_catalog;
    for (const auto& entry : catalog_entries()) {
        INFO("entry: " << entry.name);
        flatfront::AnalysisOutcome outcome = run_catalog(entry.name);
        json rep = flatfront::report_json(outcome);
        const auto& fx = entry.fixture;

        CHECK(rep["degrees"]["d"] == fx.deg_gauss);
        CHECK(rep["degrees"]["dstar"] == fx.deg_gauss_star);
        CHECK(rep["degrees"]["k"] == fx.end_count);
        CHECK(rep["osserman"]["equality"] == fx.osserman_equality);
        CHECK(rep["osserman"]["embedded"] == fx.embedded);

        if (!fx.residues.empty()) {
            std::map<std::string, std::string> got;
            for (const auto& p : rep["period"]["poles"])
                got[p["location"]] = p["residue"];
            for (const auto& [loc, res] : fx.residues) {
                REQUIRE(got.count(loc) == 1);
                CHECK(got.at(loc) == res);
            }
        }
        if (!fx.hopf_orders.empty()) {
            std::map<std::string, json> got;
            for (const auto& q : rep["canonical"]["ordQ"]) got[q["end"]] = q["ord"];
            for (const auto& [end, ord] : fx.hopf_orders) {
                REQUIRE(got.count(end) == 1);
                CHECK(got.at(end) == ord);
            }
        }
        if (!fx.nu_gauss.empty()) CHECK(rep["valuedist"]["G"]["nu"] == fx.nu_gauss);
        if (!fx.nu_gauss_star.empty())
            CHECK(rep["valuedist"]["Gstar"]["nu"] == fx.nu_gauss_star);
        CHECK(rep["period"]["verdict"] == true);
        CHECK(rep["front_condition"]["holds"] == true);
    }
}
