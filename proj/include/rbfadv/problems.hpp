#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "rbfadv/interpolation.hpp"

namespace rbfadv {

enum class VelocityKind { Constant, Variable, System, Constant2D };

struct ProblemSpec {
  std::string name;
  int dim = 1;
  Box domain;
  VelocityKind velocity = VelocityKind::Constant;
  double a = 1.0;                          // constant speed
  std::function<double(double)> a_fn;      // variable speed a(x)
  std::function<double(double)> da_fn;     // a'(x)
  double c = 1.0;                          // system: A = [[0, c], [c, 0]]
  Point a2d{1.0, 0.0};
  std::function<double(const Point&)> initial;
  std::function<double(double)> inflow;    // g(t) on the inflow boundary
  // System data in characteristic form: (g_w1, g_w2) at x = lo and x = hi.
  std::function<std::array<double, 2>(double)> g0;
  std::function<std::array<double, 2>(double)> g1;
  std::function<double(double, const Point&)> exact;
  bool periodic = false;
  double lambda_max = 1.0;

  bool has_exact() const { return static_cast<bool>(exact); }
  double lo() const { return domain.lo[0]; }
  double hi() const { return domain.hi[0]; }
};

double bump_profile(double x);

ProblemSpec inflow_bump();
ProblemSpec periodic_sin2();
ProblemSpec varcoeff_problem();
ProblemSpec acoustic_problem();
ProblemSpec advection_2d();

// inflow_bump | periodic_sin2 | varcoeff | acoustic | advect2d
ProblemSpec problem_by_name(const std::string& name);

struct ScatterConfig {
  double sigma = 4.0;
  std::uint64_t seed = 1;
};

// Perturbs the N-point equidistant set on [lo, hi]: interior x_n += Z_n with
// Z_n ~ U(-s, s), s = (hi - lo) / (sigma (N - 1)). Endpoints stay fixed. The whole interior is
// redrawn while ordering or a minimum spacing of 0.1 (hi - lo) / N fails (at most 100 draws).
CenterSet scattered_centers(std::size_t n, const ScatterConfig& cfg, double lo = 0.0, double hi = 1.0);

// Generator family used by scattered_centers, for run reports.
inline constexpr const char* kScatterGenerator = "mt19937_64";

}  // namespace rbfadv
