#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rbfadv/diagnostics.hpp"
#include "rbfadv/operators.hpp"
#include "rbfadv/problems.hpp"

namespace rbfadv {

// Negative numeric fields mean "use the problem/method default".
struct RunConfig {
  std::string problem = "inflow_bump";
  std::string method = "sat";       // usual | fr | sat
  std::string kernel = "cubic";
  std::vector<std::size_t> N{40};   // 1D: centers; advect2d: grid points per side
  int m = -1;
  double cfl = -1.0;                // default 0.1; 0.01 for 2D SAT
  double t_end = -1.0;
  double tau_L = -1.0;
  double tau_R = -1.0;
  double R0 = 0.5;
  double R1 = 0.5;
  double alpha_skew = 0.5;
  double sigma = 0.0;               // > 0 selects scattered centers
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int quad_points = 10;
  int quad_panel_multiplier = 1;
  std::size_t record_stride = 0;
  std::string sat_delta = "consistent";
  bool fr_tsvd = false;
  double fr_tsvd_tol = 1e-12;
  std::string stage_timing = "nominal";  // nominal | shifted
};

double default_t_end(const std::string& problem);
double effective_cfl(const RunConfig& cfg);
int effective_degree(const RunConfig& cfg);

// Throws ConfigError (or StabilityParameterError) before any heavy allocation.
void validate(const RunConfig& cfg);

struct Assembled {
  ProblemSpec problem;
  std::shared_ptr<const NodalBasis> basis;
  std::shared_ptr<const CorrectionFunctions> corrections;
  SemidiscreteOperator op;
  QuadratureRule rule;
  Vector u0;
};

Assembled assemble(const RunConfig& cfg, std::size_t n);

struct RunResult {
  RunReport report;
  Vector u;       // final (or last finite) state
  Vector exact;   // exact nodal values at t_final when available
};

// Runs one N; blow-up is recorded in the report rather than thrown.
RunResult run_single(const RunConfig& cfg, std::size_t n);
// All N of cfg.N on up to `threads` workers; output order follows cfg.N.
std::vector<RunReport> run_study(const RunConfig& cfg, unsigned threads);
// FR correction matrices only (no time stepping).
std::vector<RunReport> conditioning_study(const RunConfig& cfg);

// Worker cap from RBF_ADVECT_THREADS (default 1).
unsigned worker_threads();

}  // namespace rbfadv
