#include <cstring>

#include "doctest.h"
#include "support.hpp"

using namespace rbfadv;
using namespace rbfadv::testing;

namespace {

FunctionSystem decay() {
  return FunctionSystem(1, [](const Vector& u, double, Vector& out) { out.assign(1, -u[0]); });
}

double decay_error(double dt) {
  auto sys = decay();
  TimeIntegration ti;
  ti.t_end = 1.0;
  auto r = integrate(sys, {1.0}, dt, ti);
  return std::abs(r.u[0] - std::exp(-1.0));
}

}  // namespace

TEST_CASE("one step of u' = -u") {
  auto u = ssprk33_step(decay(), {1.0}, 0.0, 0.1);
  CHECK(u[0] == doctest::Approx(1.0 - 0.1 + 0.005 - 0.1 * 0.1 * 0.1 / 6).epsilon(1e-15));
  CHECK(std::abs(u[0] - 0.9048333333333334) < 1e-15);
}

TEST_CASE("zero right-hand side leaves the state unchanged") {
  FunctionSystem zero(3, [](const Vector& u, double, Vector& out) { out.assign(u.size(), 0.0); });
  Vector u{1.0, -2.0, 3.5};
  CHECK(ssprk33_step(zero, u, 0.0, 0.3) == u);
}

TEST_CASE("third-order convergence under dt refinement") {
  for (double dt : {0.1, 0.05, 0.025}) {
    const double ratio = decay_error(dt) / decay_error(dt / 2);
    CHECK(ratio == doctest::Approx(8.0).epsilon(0.1));
  }
}

TEST_CASE("integrate lands exactly on the final time") {
  auto sys = decay();
  TimeIntegration ti;
  ti.t_end = 0.52632;
  auto r = integrate(sys, {1.0}, 0.01, ti);
  CHECK(r.t == 0.52632);
  CHECK(r.steps == 53);
  ti.t_end = 0.0;
  auto z = integrate(sys, {2.0}, 0.01, ti);
  CHECK(z.u[0] == 2.0);
  CHECK(z.steps == 0);
  ti.t_end = 0.1;
  CHECK(integrate(sys, {1.0}, 0.1, ti).u == ssprk33_step(sys, {1.0}, 0.0, 0.1));
}

TEST_CASE("hooks fire at the requested steps") {
  auto sys = decay();
  TimeIntegration ti;
  ti.t_end = 1.0;
  ti.record_stride = 3;
  std::vector<std::size_t> recorded;
  std::size_t observed = 0;
  IntegrationHooks hooks;
  hooks.record = [&](std::size_t k, double, const Vector&) { recorded.push_back(k); };
  hooks.observe = [&](std::size_t, double, const Vector&) { ++observed; };
  integrate(sys, {1.0}, 0.1, ti, hooks);
  CHECK(recorded == std::vector<std::size_t>{0, 3, 6, 9, 10});
  CHECK(observed == 10);
}

TEST_CASE("integration is deterministic") {
  auto nb = line_basis(20, Kernel::quintic());
  auto op = make_sat_1d(nb, 1.0, [](double t) { return bump_profile(0.5 - t); }, false, {},
                        QuadratureRule::make());
  Vector u0 = sample(*nb, [](double x) { return bump_profile(x); });
  TimeIntegration ti;
  ti.t_end = 0.3;
  auto a = integrate(op, u0, 0.005, ti);
  auto b = integrate(op, u0, 0.005, ti);
  CHECK(std::memcmp(a.u.data(), b.u.data(), a.u.size() * sizeof(double)) == 0);
}

TEST_CASE("non-finite stages raise blow-up with context") {
  FunctionSystem bad(1, [](const Vector&, double t, Vector& out) {
    out.assign(1, t > 0.25 ? std::numeric_limits<double>::infinity() : 0.0);
  });
  TimeIntegration ti;
  ti.t_end = 1.0;
  try {
    integrate(bad, {0.0}, 0.1, ti);
    FAIL("expected blow-up");
  } catch (const BlowUpError& e) {
    CHECK(e.stage() == 1);
    CHECK(e.step() == 3);
    CHECK(e.t() == doctest::Approx(0.3));
  }
}

TEST_CASE("shifted stage timing evaluates data at the stage times") {
  std::vector<double> times;
  FunctionSystem probe(1, [&](const Vector&, double t, Vector& out) {
    times.push_back(t);
    out.assign(1, 0.0);
  });
  ssprk33_step(probe, {0.0}, 1.0, 0.2, StageTiming::Shifted);
  CHECK(times == std::vector<double>{1.0, 1.2, 1.1});
  times.clear();
  ssprk33_step(probe, {0.0}, 1.0, 0.2, StageTiming::Nominal);
  CHECK(times == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("time step rule") {
  CHECK(compute_dt(0.1, 0.025, 1.0) == doctest::Approx(0.0025));
  CHECK(compute_dt(0.01, 1.0 / 19, 1.0) == doctest::Approx(0.01 / 19));
  CHECK_THROWS_AS(compute_dt(0.0, 0.1, 1.0), DomainError);
  CHECK_THROWS_AS(compute_dt(0.1, 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(ssprk33_step(decay(), {1.0, 2.0}, 0.0, 0.1), DimensionError);
}
