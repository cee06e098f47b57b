#include <cmath>
#include <numbers>

#include "rbfadv/errors.hpp"
#include "rbfadv/problems.hpp"

namespace rbfadv {

using std::numbers::pi;

double bump_profile(double x) {
  if (!(x > 0.0 && x < 0.5)) return 0.0;
  const double s = 4.0 * x - 1.0;
  return std::exp(16.0 - 16.0 / (1.0 - s * s));
}

ProblemSpec inflow_bump() {
  ProblemSpec p;
  p.name = "inflow_bump";
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.a = 1.0;
  p.lambda_max = 1.0;
  p.initial = [](const Point& x) { return bump_profile(x[0]); };
  p.inflow = [](double t) { return bump_profile(0.5 - t); };
  p.exact = [](double t, const Point& x) {
    return x[0] >= t ? bump_profile(x[0] - t) : bump_profile(0.5 - (t - x[0]));
  };
  return p;
}

ProblemSpec periodic_sin2() {
  ProblemSpec p;
  p.name = "periodic_sin2";
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.a = 1.0;
  p.lambda_max = 1.0;
  p.periodic = true;
  p.initial = [](const Point& x) {
    double s = std::sin(2.0 * pi * x[0]);
    return s * s;
  };
  p.exact = [](double t, const Point& x) {
    double s = std::sin(2.0 * pi * (x[0] - t));
    return s * s;
  };
  return p;
}

ProblemSpec varcoeff_problem() {
  ProblemSpec p;
  p.name = "varcoeff";
  p.domain = {{0.0, 0.0}, {2.0 * pi, 0.0}};
  p.velocity = VelocityKind::Variable;
  p.a_fn = [](double x) { return x; };
  p.da_fn = [](double) { return 1.0; };
  p.lambda_max = 2.0 * pi;
  p.initial = [](const Point& x) { return std::sin(12.0 * (x[0] - 0.1)); };
  p.inflow = [](double) { return 0.0; };
  p.exact = [](double t, const Point& x) {
    const double e = std::exp(-t);
    return e * std::sin(12.0 * (x[0] * e - 0.1));
  };
  return p;
}

ProblemSpec acoustic_problem() {
  ProblemSpec p;
  p.name = "acoustic";
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.velocity = VelocityKind::System;
  p.c = 1.0;
  p.lambda_max = 1.0;
  p.initial = [](const Point&) { return 0.0; };
  p.g0 = [](double t) { return std::array<double, 2>{std::sin(t), 0.0}; };
  p.g1 = [](double t) { return std::array<double, 2>{0.0, std::sin(t)}; };
  return p;
}

ProblemSpec advection_2d() {
  ProblemSpec p;
  p.name = "advect2d";
  p.dim = 2;
  p.domain = {{0.0, 0.0}, {1.0, 1.0}};
  p.velocity = VelocityKind::Constant2D;
  p.a2d = {1.0, 0.0};
  p.lambda_max = 1.0;
  auto init = [](const Point& x) { return std::sin(4.0 * pi * x[0]) * (1.0 - 0.5 * std::sin(2.0 * pi * x[1])); };
  p.initial = init;
  p.inflow = [](double) { return 0.0; };
  p.exact = [init](double t, const Point& x) { return x[0] <= t ? 0.0 : init({x[0] - t, x[1]}); };
  return p;
}

ProblemSpec problem_by_name(const std::string& name) {
  if (name == "inflow_bump") return inflow_bump();
  if (name == "periodic_sin2") return periodic_sin2();
  if (name == "varcoeff") return varcoeff_problem();
  if (name == "acoustic") return acoustic_problem();
  if (name == "advect2d") return advection_2d();
  throw ConfigError("unknown problem '" + name + "'");
}

}  // namespace rbfadv
