#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#ifndef RBF_ADVECT_BIN
#error "RBF_ADVECT_BIN must name the CLI executable"
#endif

using namespace rbfadv;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("rbfadv_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RBF_ADVECT_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> f;
  std::istringstream in(row);
  for (std::string s; std::getline(in, s, ',');) f.push_back(s);
  return f;
}

}  // namespace

TEST_CASE("validation rejects bad parameters before running") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  auto bad = [&](auto mutate) {
    RunConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.tau_L = -0.4; })), StabilityParameterError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.tau_R = -0.5; })), StabilityParameterError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.kernel = "quintic"; c.m = 2; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.method = "dg"; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.problem = "burgers"; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.sigma = -1; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.N = {2}; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.N.clear(); })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.cfl = 0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.problem = "acoustic"; c.R0 = 1.0; })), StabilityParameterError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.problem = "acoustic"; c.method = "usual"; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.problem = "advect2d"; c.method = "fr"; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.quad_points = 0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.sat_delta = "exact"; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](RunConfig& c) { c.stage_timing = "late"; })), ConfigError);
  CHECK_NOTHROW(validate(bad([](RunConfig& c) { c.method = "usual"; c.tau_L = 0.0; })));
}

TEST_CASE("defaults") {
  CHECK(default_t_end("inflow_bump") == 0.5);
  CHECK(default_t_end("advect2d") == doctest::Approx(0.52632).epsilon(1e-4));
  RunConfig c;
  c.problem = "advect2d";
  CHECK(effective_cfl(c) == 0.01);
  c.method = "usual";
  CHECK(effective_cfl(c) == 0.1);
  c.kernel = "quintic";
  CHECK(effective_degree(c) == 3);
}

TEST_CASE("run writes the cubic sat row") {
  auto dir = scratch("run");
  REQUIRE(run_cli("run --problem inflow_bump --method sat --kernel cubic --N 40 --t-end 0.5 --out-dir " +
                  dir.string()) == 0);
  auto rows = lines(slurp(dir / "errors.csv"));
  REQUIRE(rows.size() == 2);
  const auto f = split(rows[1]);
  CHECK(f[3] == "40");
  const double l1 = std::stod(f[4]);
  CHECK(l1 >= 9.8e-3 / 2);
  CHECK(l1 <= 9.8e-3 * 2);
  CHECK(fs::exists(dir / "energy.csv"));
}

TEST_CASE("exit codes") {
  auto dir = scratch("codes").string();
  CHECK(run_cli("run --problem inflow_bump --method sat --tau -0.4 --N 10 --out-dir " + dir) == 2);
  CHECK(run_cli("run --problem inflow_bump --method sat --kernel nope --out-dir " + dir) == 2);
  CHECK(run_cli("run --no-such-flag") == 2);
  CHECK(run_cli("run --problem periodic_sin2 --method fr --kernel quintic --N 80 --t-end 60 --out-dir " + dir) == 3);
  auto rows = lines(slurp(fs::path(dir) / "errors.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].find("blowup") != std::string::npos);
}

TEST_CASE("study emits per-N rows and an order row") {
  auto dir = scratch("study");
  REQUIRE(run_cli("study --problem inflow_bump --method usual --kernel cubic --N 10 --N 20 --N 40 --N 80 "
                  "--out-dir " +
                  dir.string()) == 0);
  auto rows = lines(slurp(dir / "errors.csv"));
  REQUIRE(rows.size() == 6);
  CHECK(rows[5].find(",order,") != std::string::npos);
}

TEST_CASE("config files and determinism") {
  auto dir = scratch("cfg");
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "problem=periodic_sin2\nmethod=sat\nkernel=quintic\nN=20\nt-end=2\nrecord-stride=50\n";
  }
  const std::string base = "study --config " + (dir / "run.ini").string() + " --out-dir ";
  REQUIRE(run_cli(base + (dir / "a").string()) == 0);
  REQUIRE(run_cli(base + (dir / "b").string()) == 0);
  for (const char* f : {"errors.csv", "energy.csv"}) {
    const auto a = slurp(dir / "a" / f);
    CHECK(!a.empty());
    CHECK(a == slurp(dir / "b" / f));
  }
  CHECK(slurp(dir / "a" / "errors.csv").find("periodic_sin2,sat,quintic,20,") != std::string::npos);
  REQUIRE(run_cli(base + (dir / "c").string() + " --N 10") == 0);
  CHECK(slurp(dir / "c" / "errors.csv").find(",quintic,10,") != std::string::npos);
}

TEST_CASE("conditioning report") {
  auto dir = scratch("cond");
  REQUIRE(run_cli("conditioning --method fr --kernel quintic --N 10 --N 20 --out-dir " + dir.string()) == 0);
  auto rows = lines(slurp(dir / "conditioning.csv"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "kernel,N,cond_A,max_residual_cL,max_residual_cR");
}

TEST_CASE("threaded studies match sequential ones") {
  RunConfig cfg;
  cfg.N = {10, 20, 40};
  cfg.t_end = 0.2;
  auto a = run_study(cfg, 1);
  auto b = run_study(cfg, 3);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a[i].N == cfg.N[i]);
    CHECK(a[i].error_l1 == b[i].error_l1);
  }
}
