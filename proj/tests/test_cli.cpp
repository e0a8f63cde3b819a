#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "wavefront/io.hpp"

using namespace wavefront;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch(const std::string& name) {
    const char* env = std::getenv("WAVEFRONT_TEST_TMP");
    const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "wavefront_cli_test";
    fs::create_directories(root);
    const fs::path p = root / name;
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cstar for the reference parameters") {
    const Run r = run({"cstar", "--n", "2", "--p", "3", "--q", "2", "--k", "1"});
    REQUIRE(r.code == 0);
    const CStarResult c = cstar_from_json(Json::parse(r.out));
    CHECK(c.c_star > 1.63);
    CHECK(c.c_star < 1.73);
    CHECK(c.bounds_hold);
}

TEST_CASE("constraint violations exit 1 and name the constraint") {
    const Run r = run({"cstar", "--n", "2", "--p", "2", "--q", "2", "--k", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("p>q violated") != std::string::npos);
}

TEST_CASE("supercritical convection puts c* above kn") {
    const Run r = run({"cstar", "--n", "7", "--p", "3", "--q", "2", "--k", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream ss(r.out);
    std::string header, row;
    std::getline(ss, header);
    std::getline(ss, row);
    CHECK(header.rfind("n,p,q,k,c_star", 0) == 0);
    std::vector<std::string> cells;
    std::stringstream rs(row);
    for (std::string cell; std::getline(rs, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 11);
    const double cs = std::stod(cells[4]);
    CHECK(cs > 7.0);
    CHECK(cs < 9.0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"cstar", "--format", "xml"}).code == 1);
    CHECK(run({"cstar", "--ctol", "-1"}).code == 1);
    const Run missing = run({"classify"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--c") != std::string::npos);
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("portrait") != std::string::npos);
}

TEST_CASE("cycle captions") {
    const Run found = run({"cycle", "--c", "1.8"});
    REQUIRE(found.code == 0);
    CHECK(cycle_from_json(Json::parse(found.out)).found);
    const Run none = run({"cycle", "--c", "1.6"});
    REQUIRE(none.code == 0);
    CHECK_FALSE(cycle_from_json(Json::parse(none.out)).found);
}

TEST_CASE("cycle orbit file is readable") {
    const fs::path orbit = scratch("orbit.csv");
    REQUIRE(run({"cycle", "--c", "1.8", "--orbit", orbit.string()}).code == 0);
    std::ifstream f(orbit);
    const Trajectory t = read_trajectory_csv(f);
    CHECK(t.samples.size() > 100);
}

TEST_CASE("classify uses --cstar when given") {
    const Run r = run({"classify", "--c", "1.8", "--cstar", "1.9"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["c_star"].get<double>() == 1.9);
    CHECK(wave_class_from_json(j).kind == WaveKind::FrontZeroToOne);
    const Run computed = run({"classify", "--c", "1.8"});
    CHECK(wave_class_from_json(Json::parse(computed.out)).kind == WaveKind::OscillatoryToZero);
}

TEST_CASE("profile output parses back") {
    const Run js = run({"profile", "--c", "4.5", "--cstar", "1.6732325553894"});
    REQUIRE(js.code == 0);
    const Json j = Json::parse(js.out);
    CHECK(j["verify"]["passed"].get<bool>());
    const Profile prof = profile_from_json(j["profile"]);
    CHECK(prof.kind == WaveKind::FrontOneToZeroMonotone);

    const fs::path csv = scratch("profile.csv");
    REQUIRE(run({"profile", "--c", "4.5", "--cstar", "1.6732325553894", "--format", "csv", "--out", csv.string()})
                .code == 0);
    std::ifstream f(csv);
    const Profile back = read_profile_csv(f);
    REQUIRE(back.samples.size() == prof.samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < back.samples.size(); ++i) {
        worst = std::max(worst, std::abs(back.samples[i].f - prof.samples[i].f));
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("periodic profile needs a periodic companion") {
    CHECK(run({"profile", "--c", "1.8", "--periodic", "--cstar", "1.6732325553894"}).code == 0);
    CHECK(run({"profile", "--c", "4.5", "--periodic", "--cstar", "1.6732325553894"}).code == 1);
}

TEST_CASE("portrait writes one file per trajectory plus an index") {
    const fs::path dir = scratch("portrait");
    const Run r = run({"portrait", "--c", "2.1", "--grid", "3", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const Json index = Json::parse(slurp(dir / "index.json"));
    REQUIRE(index["files"].size() == 2 + 9);
    for (const auto& f : index["files"]) {
        std::ifstream in(dir / f["file"].get<std::string>());
        const Trajectory t = read_trajectory_csv(in);
        CHECK(t.samples.size() == f["samples"].get<std::size_t>());
    }
    // l0 traced backward spirals out of P2.
    CHECK(index["files"][1]["kind"] == "l0");
    CHECK(index["files"][1]["terminal"] == "ConvergedP2");
}

TEST_CASE("outputs are byte identical across runs and thread counts") {
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    REQUIRE(run({"portrait", "--c", "2.1", "--grid", "3", "--out", a.string()}).code == 0);
    setenv("WAVEFRONT_THREADS", "1", 1);
    REQUIRE(run({"portrait", "--c", "2.1", "--grid", "3", "--out", b.string()}).code == 0);
    const Run c1 = run({"checks", "--cmin", "-1", "--cmax", "3", "--cstep", "0.5"});
    unsetenv("WAVEFRONT_THREADS");
    const Run c2 = run({"checks", "--cmin", "-1", "--cmax", "3", "--cstep", "0.5"});
    for (const auto& entry : fs::directory_iterator(a)) {
        CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
    CHECK(c1.out == c2.out);
    CHECK(run({"cstar"}).out == run({"cstar"}).out);
}

TEST_CASE("checks and tails pass for the reference parameters") {
    const Run checks = run({"checks"});
    CHECK(checks.code == 0);
    CHECK(Json::parse(checks.out)["passed"].get<bool>());

    const Run tails = run({"tails", "--c", "1"});
    CHECK(tails.code == 0);
    const Json j = Json::parse(tails.out);
    REQUIRE(j["tails"].size() == 2);
    CHECK(j["tails"][0]["branch"] == "l1");
    CHECK(j["tails"][1]["constant"].get<double>() == 1.0);

    CHECK(run({"tails", "--c", "0", "--q", "1"}).code == 0);
}

TEST_CASE("checks skip the Lienard curves above the Hopf threshold") {
    const Run r = run({"checks", "--n", "7", "--cmin", "5", "--cmax", "9", "--cstep", "0.5"});
    const Json j = Json::parse(r.out);
    CHECK(j["lienard"].empty());
    CHECK(j["calculus"]["passed"].get<bool>());
}
