#include <cmath>

#include "rbfadv/operators.hpp"

namespace rbfadv {

namespace {

struct Sampled {
  PointRule1D rule;
  Vector val;   // u_N(x_q)
  Vector der;   // u_N'(x_q)
};

Sampled sample(const NodalBasis& nb, const Vector& u, const QuadratureRule& rule, const NodalBasis* other = nullptr) {
  Sampled s{basis_rule(nb, rule, other), {}, {}};
  const Expansion coef = nb.expansion(u);
  s.val.resize(s.rule.x.size());
  s.der.resize(s.rule.x.size());
  for (std::size_t q = 0; q < s.rule.x.size(); ++q) {
    s.val[q] = nb.evaluate_expansion(coef, {s.rule.x[q], 0.0});
    s.der[q] = nb.evaluate_expansion_derivative(coef, {s.rule.x[q], 0.0}, 0);
  }
  return s;
}

}  // namespace

double fr_conservation_residual(const SemidiscreteOperator& op, const Vector& u, double t, const QuadratureRule& rule) {
  if (op.variant != OperatorVariant::FR1D) throw ConfigError("conservation residual needs the FR operator");
  const auto& cf = *op.corrections;
  auto s = sample(*op.basis, u, rule, cf.aux.get());
  Vector dl = cf.dc_L(s.rule.x);
  Vector dr = cf.dc_R(s.rule.x);
  const double ul = dot(op.psi_L, u);
  const double ur = dot(op.psi_R, u);
  auto [fl, fr] = op.boundary_fluxes(u, t);
  double integral = 0.0;
  for (std::size_t q = 0; q < s.val.size(); ++q)
    integral += s.rule.w[q] * (-op.a * s.der[q] - dl[q] * (fl - op.a * ul) - dr[q] * (fr - op.a * ur));
  return std::abs(integral - (fl - fr));
}

double fr_conservation_residual_nodal(const SemidiscreteOperator& op, const Vector& u, double t) {
  if (op.variant != OperatorVariant::FR1D) throw ConfigError("conservation residual needs the FR operator");
  Vector l;
  op.rhs(u, t, l);
  auto [fl, fr] = op.boundary_fluxes(u, t);
  return std::abs(dot(op.H, l) - (fl - fr));
}

double sat_energy_rate(const SemidiscreteOperator& op, const Vector& u, double t, const QuadratureRule& rule) {
  auto s = sample(*op.basis, u, rule);
  const double ul = dot(op.psi_L, u);
  const double ur = dot(op.psi_R, u);
  double rate = 0.0;
  if (op.variant == OperatorVariant::SAT1D) {
    for (std::size_t q = 0; q < s.val.size(); ++q) rate += 2.0 * s.rule.w[q] * s.val[q] * (-op.a * s.der[q]);
    if (op.a > 0.0) {
      const double gl = op.periodic ? ur : op.g(t);
      rate += 2.0 * op.tau_L * op.a * ul * (ul - gl);
    } else if (op.a < 0.0) {
      const double gr = op.periodic ? ul : op.g(t);
      rate += -2.0 * op.tau_R * op.a * ur * (ur - gr);
    }
    return rate;
  }
  if (op.variant == OperatorVariant::VarCoeff1D && !op.strong) {
    for (std::size_t q = 0; q < s.val.size(); ++q) {
      const double x = s.rule.x[q];
      const double flux_div = op.da_fn(x) * s.val[q] + op.a_fn(x) * s.der[q];
      rate += 2.0 * s.rule.w[q] * s.val[q] * (-flux_div);
    }
    if (op.a_L > 0.0) rate += 2.0 * op.tau_L * op.a_L * ul * (ul - op.g(t));
    if (op.a_R < 0.0) rate += -2.0 * op.tau_R * op.a_R * ur * (ur - op.g(t));
    return rate;
  }
  throw ConfigError("energy rate needs a SAT operator");
}

double sat_energy_rate_nodal(const SemidiscreteOperator& op, const Vector& u, double t) {
  Vector l;
  op.rhs(u, t, l);
  if (op.M.rows() == u.size()) return 2.0 * dot(u, op.M * l);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += op.H[i] * u[i] * l[i];
  return 2.0 * s;
}

double sat_energy_bound(const SemidiscreteOperator& op, double t) {
  if (op.variant != OperatorVariant::SAT1D) throw ConfigError("energy bound needs the SAT operator");
  if (op.periodic) return 0.0;
  const double g = op.g(t);
  if (op.a > 0.0) return -op.tau_L * op.tau_L * op.a * g * g / (1.0 + 2.0 * op.tau_L);
  if (op.a < 0.0) return op.tau_R * op.tau_R * op.a * g * g / (1.0 + 2.0 * op.tau_R);
  return 0.0;
}

double system_energy_rate(const SemidiscreteOperator& op, const Vector& state, double t, const QuadratureRule& rule) {
  if (op.variant != OperatorVariant::SATSystem1D) throw ConfigError("system energy rate needs the system operator");
  const std::size_t n = op.basis->size();
  Vector uu(state.begin(), state.begin() + n), vv(state.begin() + n, state.end());
  auto su = sample(*op.basis, uu, rule);
  auto sv = sample(*op.basis, vv, rule);
  double rate = 0.0;
  for (std::size_t q = 0; q < su.val.size(); ++q)
    rate += -2.0 * op.c * su.rule.w[q] * (su.val[q] * sv.der[q] + sv.val[q] * su.der[q]);
  const std::array<double, 2> w0{dot(op.psi_L, uu), dot(op.psi_L, vv)};
  const std::array<double, 2> w1{dot(op.psi_R, uu), dot(op.psi_R, vv)};
  const auto d0 = op.g0(t);
  const auto d1 = op.g1(t);
  for (int r = 0; r < 2; ++r) {
    const double e0 = op.Pi0[r][0] * w0[0] + op.Pi0[r][1] * w0[1] - op.p0[r] * d0[0];
    const double e1 = op.Pi1[r][0] * w1[0] + op.Pi1[r][1] * w1[1] - op.p1[r] * d1[1];
    rate += 2.0 * (w0[r] * e0 + w1[r] * e1);
  }
  return rate;
}

}  // namespace rbfadv
