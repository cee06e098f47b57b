#include <cmath>

#include "rbfadv/simd.hpp"
#include "rbfadv/timestep.hpp"

namespace rbfadv {

namespace {

bool finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

double compute_dt(double cfl, double h, double lambda_max) {
  if (!(cfl > 0.0) || !(h > 0.0) || !(lambda_max > 0.0))
    throw DomainError("compute_dt needs positive C, h and lambda_max");
  return cfl * h / lambda_max;
}

Vector ssprk33_step(const Semidiscretization& sys, const Vector& u, double t, double dt, StageTiming timing,
                    std::size_t step) {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  const std::size_t n = u.size();
  if (n != sys.state_size()) throw DimensionError("state size does not match the semidiscretization");
  const bool shifted = timing == StageTiming::Shifted;
  Vector l(n), u1(u), u2(n), out(n);

  sys.rhs(u, t, l);
  simd::axpy(dt, l.data(), u1.data(), n);
  sys.enforce(u1, shifted ? t + dt : t);
  if (!finite(u1)) throw BlowUpError(t, 1, step);

  const double t2 = shifted ? t + dt : t;
  sys.rhs(u1, t2, l);
  for (std::size_t i = 0; i < n; ++i) u2[i] = 0.75 * u[i] + 0.25 * u1[i] + 0.25 * dt * l[i];
  sys.enforce(u2, shifted ? t + 0.5 * dt : t);
  if (!finite(u2)) throw BlowUpError(t, 2, step);

  const double t3 = shifted ? t + 0.5 * dt : t;
  sys.rhs(u2, t3, l);
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] / 3.0 + 2.0 / 3.0 * u2[i] + 2.0 / 3.0 * dt * l[i];
  sys.enforce(out, t + dt);
  if (!finite(out)) throw BlowUpError(t, 3, step);
  return out;
}

IntegrationResult integrate(const Semidiscretization& sys, Vector u0, double dt, const TimeIntegration& ti,
                            const IntegrationHooks& hooks) {
  if (!(ti.t_end >= 0.0)) throw DomainError("end time must be nonnegative");
  IntegrationResult r{std::move(u0), 0.0, 0};
  if (hooks.record) hooks.record(0, 0.0, r.u);
  if (ti.t_end == 0.0) return r;
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  auto nsteps = static_cast<std::size_t>(std::ceil(ti.t_end / dt - 1e-9));
  if (nsteps == 0) nsteps = 1;
  for (std::size_t k = 0; k < nsteps; ++k) {
    const double t = double(k) * dt;
    const bool last = k + 1 == nsteps;
    const double h = last ? ti.t_end - t : dt;
    r.u = ssprk33_step(sys, r.u, t, h, ti.timing, k);
    r.t = last ? ti.t_end : double(k + 1) * dt;
    r.steps = k + 1;
    if (hooks.observe) hooks.observe(r.steps, r.t, r.u);
    if (hooks.record && (last || (ti.record_stride > 0 && r.steps % ti.record_stride == 0)))
      hooks.record(r.steps, r.t, r.u);
  }
  return r;
}

}  // namespace rbfadv
