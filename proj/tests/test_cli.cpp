#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "registry.hpp"

using namespace contact_sextic::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("contact_sextic_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

// parameters for which the default identity guess lies in the Newton basin
const char* kNearIdentity =
    R"({"c1":"1/10","c2":"-1/10","c3":"1/20","c4":"11/10","c5":"9/10","c6":"1/10","c7":"1/20"})";

}  // namespace

TEST_CASE("verify canform") {
    const auto r = run({"verify", "--family", "canform", "--json"});
    CHECK(r.exit_code == Ok);
    CHECK(r.json_output);
    CHECK(r.payload["residual"] == "0");
    CHECK(r.payload["incidence"] == "0");
    CHECK(r.payload["passed"] == true);
}

TEST_CASE("verify every registered family at its defaults") {
    for (const auto& f : families()) {
        CAPTURE(f.name);
        const auto r = run({"verify", "--family", f.name});
        CHECK(r.exit_code == Ok);
        CHECK(r.payload["residual"] == "0");
    }
}

TEST_CASE("verify fails on a curve that is not a solution") {
    TempDir d;
    write(d / "quintic.json", R"({"parametric": {"x": "t", "y": "t^5"}})");
    const auto r = run({"verify", "--curve", d / "quintic.json"});
    CHECK(r.exit_code == CheckFailed);
    CHECK(r.payload["passed"] == false);
    CHECK(r.payload["residual"] != "0");

    // conics are checked against the fifth-order equation instead
    const auto h = run({"verify", "--family", "conic", "--param", "c1=2", "--param", "point=[0,1]"});
    CHECK(h.exit_code == Ok);
    CHECK(h.payload["check"] == "halphen");
}

TEST_CASE("random general tuples are deterministic in the seed") {
    const auto a = run({"verify", "--family", "general", "--random", "3", "--seed", "9"});
    const auto b = run({"verify", "--family", "general", "--random", "3", "--seed", "9"});
    const auto c = run({"verify", "--family", "general", "--random", "3", "--seed", "10"});
    CHECK(a.exit_code == Ok);
    CHECK(a.payload == b.payload);
    CHECK(a.payload["trials"][0]["params"] != c.payload["trials"][0]["params"]);
    CHECK(run({"verify", "--family", "canform", "--random", "2"}).exit_code == Usage);
}

TEST_CASE("curves printed by one command are read by others") {
    TempDir d;
    auto b = run({"family", "build", "--name", "new_curve", "--param", "b=1/2", "--out", d / "nc.json"});
    REQUIRE(b.exit_code == Ok);
    CHECK(b.artifacts == std::vector<std::string>{d / "nc.json"});
    auto v = run({"verify", "--curve", d / "nc.json"});
    CHECK(v.exit_code == Ok);
    CHECK(v.payload["contact"] == "0");

    auto t = run({"transform", "--curve", d / "nc.json", "--point", R"({"c2":"1/3","c4":2,"c7":"-1/5"})",
                  "--out", d / "moved.json"});
    REQUIRE(t.exit_code == Ok);
    CHECK(run({"verify", "--curve", d / "moved.json"}).exit_code == Ok);

    auto f = run({"transform", "--family", "seed", "--flow", "H9", "--time", "2", "--out", d / "flowed.json"});
    REQUIRE(f.exit_code == Ok);
    CHECK(f.payload.contains("z"));
    auto fv = run({"verify", "--curve", d / "flowed.json"});
    CHECK(fv.exit_code == Ok);
    CHECK(fv.payload["contact"] == "0");

    CHECK(run({"transform", "--family", "seed", "--flow", "H8", "--point", "{}"}).exit_code == Usage);
}

TEST_CASE("algebra table") {
    const auto r = run({"algebra", "--json"});
    CHECK(r.exit_code == Ok);
    CHECK(r.payload["span_dimension"] == 10);
    CHECK(r.payload["point_type_count"] == 7);
    CHECK(r.payload["jacobi"] == true);
    CHECK(r.payload["killing_determinant"] != "0");
    CHECK(r.payload["brackets"].size() == 10);
    CHECK(r.payload["killing"].size() == 10);
    CHECK(r.payload["brackets"][0][0].empty());
    // the printed table is antisymmetric entry by entry
    const auto& br = r.payload["brackets"];
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            for (const auto& [name, q] : br[i][j].items()) {
                const std::string s = q.get<std::string>();
                CHECK(br[j][i][name] == (s[0] == '-' ? s.substr(1) : "-" + s));
            }
}

TEST_CASE("resultant and elimination split") {
    const auto r = run({"resultant", "--u", "x^2 + z^2 - 1", "--v", "x - z"});
    CHECK(r.exit_code == Ok);
    CHECK(r.payload["resultant"] == "2*x^2 - 1");

    const auto s = run({"resultant", "--b", "1/2"});
    CHECK(s.exit_code == Ok);
    CHECK(s.payload["solution_is_new_curve"] == true);
    CHECK(s.payload["spurious"] != "0");

    CHECK(run({"resultant", "--u", "x"}).exit_code == Usage);
    CHECK(run({"resultant", "--u", "x + 1", "--v", "x - 1", "--var", "z"}).exit_code == MathDomain);
}

TEST_CASE("invariants") {
    const auto r = run({"invariants", "--family", "new_curve", "--param", "b=1/2", "--singular"});
    CHECK(r.exit_code == Ok);
    CHECK(r.payload["cube_quartic"].is_string());
    CHECK(r.payload["quartic_real_roots"] == 2);
    CHECK(r.payload["equianharmonic"] == true);
    CHECK(r.payload["singular_points"].size() >= 2);

    const auto c = run({"invariants", "--poly", "y^2 + x*(x - 1)^3", "--singular", "--degree", "4", "--deltas", "1,2"});
    CHECK(c.exit_code == Ok);
    CHECK(c.payload["arithmetic_genus"] == 0);
    bool cusp = false;
    for (const auto& p : c.payload["singular_points"])
        if (p.contains("exact") && p["exact"] == nlohmann::json::array({"1", "0"})) cusp = p["multiplicity"] == 2;
    CHECK(cusp);

    const auto s = run({"invariants", "--sextic", "(x - 2/3)^6"});
    CHECK(s.payload["null_cone"] == true);
    const auto t = run({"invariants", "--sextic", "x^6 + 1"});
    CHECK(t.payload["null_cone"] == false);
    CHECK(run({"invariants"}).exit_code == Usage);
}

TEST_CASE("integrate writes the frozen CSV columns") {
    TempDir d;
    const auto r = run({"integrate", "--family", "canform", "--x0", "0", "--y0", "0", "--to", "0.3", "--out",
                        d / "traj.csv"});
    REQUIRE(r.exit_code == Ok);
    CHECK(r.payload["status"] == "completed");
    CHECK(r.payload["final"]["x"].get<double>() == doctest::Approx(0.3));
    const std::string csv = slurp(d / "traj.csv");
    CHECK(csv.rfind("x,y,y1,y2,y3,y4,y5,y6\n0,0,4,0,-16,0,-320,0\n", 0) == 0);

    write(d / "flat.json", R"({"x0": 0, "y": [0, 1, 0, 0, 1, 0, 0]})");
    CHECK(run({"integrate", "--jet", d / "flat.json", "--to", "1"}).exit_code == MathDomain);
}

TEST_CASE("family jet feeds fit") {
    TempDir d;
    const auto j = run({"family", "jet", "--name", "general", "--params", kNearIdentity, "--t", "2", "--out",
                        d / "jet.json"});
    REQUIRE(j.exit_code == Ok);
    CHECK(j.payload["y"].size() == 7);
    CHECK(j.payload["exact"]["y"].size() == 7);

    const auto f = run({"fit", "--data", d / "jet.json", "--json"});
    REQUIRE(f.exit_code == Ok);
    CHECK(f.payload["residual_norm"].get<double>() < 1e-9);
    CHECK(f.payload["iterations"].get<int>() <= 25);
    for (const auto& key : {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "residuals", "iterations"})
        CHECK(f.payload.contains(key));

    // far from the basin the failure is reported, not hidden
    const auto far = run({"fit", "--data", d / "jet.json", "--guess", R"({"c4": -3, "c5": 5})", "--max-iter", "3"});
    CHECK(far.exit_code != Ok);
}

TEST_CASE("plot new_curve at b = 1/2") {
    TempDir d;
    const auto r = run({"plot", "--family", "new_curve", "--param", "b=1/2", "--out", d / "curve.svg"});
    REQUIRE(r.exit_code == Ok);
    CHECK(r.artifacts.size() == 2);
    CHECK(r.payload["cusps"].size() == 2);
    CHECK(r.payload["poles"] == nlohmann::json::array({0.0}));
    CHECK(r.payload["segments"].get<int>() >= 2);
    const std::string svg = slurp(d / "curve.svg");
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(slurp(d / "curve.csv").rfind("t,x,y,segment\n", 0) == 0);

    // a fixed window and a finite t-range
    const auto w = run({"plot", "--family", "seed", "--tmin", "-3", "--tmax", "3", "--viewport", "-0.5,1.5,-1,1",
                        "--out", d / "seed.svg", "--csv", d / "seed_samples.csv"});
    CHECK(w.exit_code == Ok);
    CHECK(w.payload["viewport"] == nlohmann::json::array({-0.5, 1.5, -1, 1}));
    CHECK(run({"plot", "--family", "seed", "--viewport", "1,0,0,1"}).exit_code == Usage);
}

TEST_CASE("exit codes for usage and domain errors") {
    CHECK(run({}).exit_code == Usage);
    CHECK(run({"nonsense"}).exit_code == Usage);
    CHECK(run({"verify", "--family", "nosuch"}).exit_code == Usage);
    CHECK(run({"verify", "--family", "general", "--params", "{not json"}).exit_code == Usage);
    CHECK(run({"verify", "--family", "general", "--param", "c9=1"}).exit_code == Usage);
    CHECK(run({"verify", "--family", "general", "--param", "c1=0.1"}).exit_code == Usage);
    const auto d = run({"verify", "--family", "general", "--param", "c4=0"});
    CHECK(d.exit_code == MathDomain);
    CHECK(d.payload["error"]["code"] == "DegenerateMap");
    CHECK(run({"family", "build", "--name", "degree_four", "--param", "P=x^4 - 1"}).exit_code == MathDomain);
    CHECK(run({"--help"}).exit_code == Ok);
}

TEST_CASE("family list describes every family") {
    const auto r = run({"family", "list"});
    CHECK(r.exit_code == Ok);
    CHECK(r.payload["families"].size() == families().size());
    for (const auto& f : r.payload["families"]) {
        CHECK(f.contains("name"));
        CHECK(f.contains("params"));
    }
}
