#pragma once

#include <functional>

#include "rbfadv/linalg.hpp"

namespace rbfadv {

// Anything SSPRK(3,3) can advance: a right-hand side plus optional strong constraints.
class Semidiscretization {
 public:
  virtual ~Semidiscretization() = default;
  virtual std::size_t state_size() const = 0;
  virtual void rhs(const Vector& u, double t, Vector& out) const = 0;
  virtual void enforce(Vector& /*u*/, double /*t*/) const {}
};

// Wraps a plain function as a Semidiscretization.
class FunctionSystem : public Semidiscretization {
 public:
  using Fn = std::function<void(const Vector&, double, Vector&)>;
  FunctionSystem(std::size_t n, Fn f) : n_(n), f_(std::move(f)) {}
  std::size_t state_size() const override { return n_; }
  void rhs(const Vector& u, double t, Vector& out) const override { f_(u, t, out); }

 private:
  std::size_t n_;
  Fn f_;
};

// Nominal: every stage sees the step's start time. Shifted: t, t+dt, t+dt/2.
enum class StageTiming { Nominal, Shifted };

struct TimeIntegration {
  double cfl = 0.1;
  double t_end = 0.0;
  std::size_t record_stride = 0;  // 0: record only the first and last state
  StageTiming timing = StageTiming::Nominal;
};

struct IntegrationHooks {
  std::function<void(std::size_t step, double t, const Vector& u)> record;   // every record_stride steps
  std::function<void(std::size_t step, double t, const Vector& u)> observe;  // every step
};

struct IntegrationResult {
  Vector u;
  double t = 0.0;
  std::size_t steps = 0;
};

double compute_dt(double cfl, double h, double lambda_max);

// One SSPRK(3,3) step. Throws BlowUpError on a non-finite stage.
Vector ssprk33_step(const Semidiscretization& sys, const Vector& u, double t, double dt,
                    StageTiming timing = StageTiming::Nominal, std::size_t step = 0);

// Fixed dt; the last step is shortened to land on t_end exactly.
IntegrationResult integrate(const Semidiscretization& sys, Vector u0, double dt, const TimeIntegration& ti,
                            const IntegrationHooks& hooks = {});

}  // namespace rbfadv
