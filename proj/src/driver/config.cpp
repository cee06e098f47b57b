#include <cstdlib>
#include <sstream>

#include "rbfadv/experiment.hpp"

namespace rbfadv {

double default_t_end(const std::string& problem) {
  if (problem == "inflow_bump") return 0.5;
  if (problem == "periodic_sin2") return 100.0;
  if (problem == "varcoeff") return 1.5;
  if (problem == "acoustic") return 100.0;
  if (problem == "advect2d") return 10.0 / 19.0;
  throw ConfigError("unknown problem '" + problem + "'");
}

double effective_cfl(const RunConfig& cfg) {
  if (cfg.cfl > 0.0) return cfg.cfl;
  return cfg.problem == "advect2d" && cfg.method == "sat" ? 0.01 : 0.1;
}

int effective_degree(const RunConfig& cfg) {
  return cfg.m >= 0 ? cfg.m : parse_kernel(cfg.kernel).default_degree();
}

void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& s) { throw ConfigError(s); };
  default_t_end(cfg.problem);
  if (cfg.method != "usual" && cfg.method != "fr" && cfg.method != "sat")
    fail("method must be usual, fr or sat, got '" + cfg.method + "'");
  Kernel k = parse_kernel(cfg.kernel);
  const int m = effective_degree(cfg);
  if (m < k.cpd_order()) {
    std::ostringstream os;
    os << "m=" << m << " is below the conditional order " << k.cpd_order() << " of kernel " << k.name();
    fail(os.str());
  }
  if (cfg.N.empty()) fail("at least one N is required");
  for (auto n : cfg.N)
    if (n < 3) fail("N must be at least 3");
  if (cfg.cfl == 0.0 || (cfg.cfl < 0.0 && cfg.cfl != -1.0)) fail("cfl must be positive");
  if (cfg.t_end < 0.0 && cfg.t_end != -1.0) fail("t_end must be nonnegative");
  if (cfg.method == "sat") {
    if (!(cfg.tau_L < -0.5)) throw StabilityParameterError("tau_L must satisfy tau_L < -1/2");
    if (!(cfg.tau_R < -0.5)) throw StabilityParameterError("tau_R must satisfy tau_R < -1/2");
  }
  if (cfg.problem == "acoustic") {
    if (cfg.method != "sat") fail("the acoustic problem supports method=sat only");
    if (!(cfg.R0 > 0.0 && cfg.R0 < 1.0) || !(cfg.R1 > 0.0 && cfg.R1 < 1.0))
      throw StabilityParameterError("R0 and R1 must lie in (0,1)");
  }
  if (cfg.problem == "advect2d" && cfg.method == "fr") fail("FR is one-dimensional");
  if (cfg.problem == "varcoeff" && cfg.method == "fr") fail("FR is implemented for constant speed only");
  if (cfg.sigma < 0.0) fail("sigma must be positive (or 0 for equidistant centers)");
  if (cfg.sigma > 0.0 && cfg.problem == "advect2d") fail("scattered centers are 1D only");
  if (cfg.quad_points < 1 || cfg.quad_points > 64) fail("quad points must be in [1, 64]");
  if (cfg.quad_panel_multiplier < 1) fail("quad panel multiplier must be >= 1");
  parse_delta_form(cfg.sat_delta);
  if (cfg.stage_timing != "nominal" && cfg.stage_timing != "shifted")
    fail("stage_timing must be nominal or shifted");
  if (!(cfg.alpha_skew >= 0.0 && cfg.alpha_skew <= 1.0)) fail("alpha_skew must lie in [0,1]");
  if (cfg.fr_tsvd && !(cfg.fr_tsvd_tol > 0.0)) fail("fr_tsvd_tol must be positive");
}

unsigned worker_threads() {
  const char* env = std::getenv("RBF_ADVECT_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<unsigned>(v);
}

}  // namespace rbfadv
