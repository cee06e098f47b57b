#include <cmath>

#include "rbfadv/operators.hpp"
#include "rbfadv/simd.hpp"

namespace rbfadv {

const char* variant_name(OperatorVariant v) {
  switch (v) {
    case OperatorVariant::Usual1D: return "usual1d";
    case OperatorVariant::FR1D: return "fr1d";
    case OperatorVariant::SAT1D: return "sat1d";
    case OperatorVariant::VarCoeff1D: return "varcoeff1d";
    case OperatorVariant::SATSystem1D: return "satsystem1d";
    case OperatorVariant::Usual2D: return "usual2d";
    case OperatorVariant::SAT2D: return "sat2d";
  }
  return "?";
}

DeltaForm parse_delta_form(const std::string& s) {
  if (s == "consistent") return DeltaForm::Consistent;
  if (s == "lumped") return DeltaForm::Lumped;
  throw ConfigError("sat_delta must be 'consistent' or 'lumped', got '" + s + "'");
}

double upwind(double a, double u_left, double u_right) { return a >= 0.0 ? a * u_left : a * u_right; }

std::size_t SemidiscreteOperator::state_size() const {
  return variant == OperatorVariant::SATSystem1D ? 2 * basis->size() : basis->size();
}

std::pair<double, double> SemidiscreteOperator::boundary_fluxes(const Vector& u, double t) const {
  const double ul = dot(psi_L, u);
  const double ur = dot(psi_R, u);
  double gl = 0.0, gr = 0.0;
  if (periodic) {
    gl = ur;
    gr = ul;
  } else if (a >= 0.0) {
    gl = g(t);
  } else {
    gr = g(t);
  }
  return {upwind(a, gl, ul), upwind(a, ur, gr)};
}

namespace {

void scaled_matvec(const DenseMatrix& m, const Vector& x, double s, Vector& out) {
  matvec(m, x, out);
  for (double& v : out) v *= s;
}

}  // namespace

void SemidiscreteOperator::rhs(const Vector& u, double t, Vector& out) const {
  if (u.size() != state_size()) throw DimensionError("state size does not match the operator");
  const std::size_t n = basis->size();
  switch (variant) {
    case OperatorVariant::Usual1D: {
      Vector v(u);
      v[inflow_index] = periodic ? u[inflow_index == 0 ? n - 1 : 0] : g(t);
      scaled_matvec(Dx, v, -a, out);
      out[inflow_index] = 0.0;
      return;
    }
    case OperatorVariant::FR1D: {
      scaled_matvec(Dx, u, -a, out);
      const double ul = dot(psi_L, u);
      const double ur = dot(psi_R, u);
      auto [fl, fr] = boundary_fluxes(u, t);
      simd::axpy(-(fl - a * ul), dcL.data(), out.data(), n);
      simd::axpy(-(fr - a * ur), dcR.data(), out.data(), n);
      return;
    }
    case OperatorVariant::SAT1D: {
      scaled_matvec(Dx, u, -a, out);
      const double ul = dot(psi_L, u);
      const double ur = dot(psi_R, u);
      if (a > 0.0) {
        const double gl = periodic ? ur : g(t);
        simd::axpy(tau_L * a * (ul - gl), delta_L.data(), out.data(), n);
      } else if (a < 0.0) {
        const double gr = periodic ? ul : g(t);
        simd::axpy(-tau_R * a * (ur - gr), delta_R.data(), out.data(), n);
      }
      return;
    }
    case OperatorVariant::VarCoeff1D: {
      Vector v(u);
      if (strong) v[0] = g(t);
      Vector au(n), du(n), dau(n);
      for (std::size_t i = 0; i < n; ++i) au[i] = a_nodes[i] * v[i];
      matvec(Dx, au, dau);
      matvec(Dx, v, du);
      out.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = -(alpha * dau[i] + (1.0 - alpha) * (da_nodes[i] * v[i] + a_nodes[i] * du[i]));
      if (strong) {
        out[0] = 0.0;
        return;
      }
      if (a_L > 0.0) simd::axpy(tau_L * a_L * (dot(psi_L, u) - g(t)), delta_L.data(), out.data(), n);
      if (a_R < 0.0) simd::axpy(-tau_R * a_R * (dot(psi_R, u) - g(t)), delta_R.data(), out.data(), n);
      return;
    }
    case OperatorVariant::SATSystem1D: {
      Vector uu(u.begin(), u.begin() + n), vv(u.begin() + n, u.end());
      Vector du(n), dv(n);
      scaled_matvec(Dx, vv, -c, du);
      scaled_matvec(Dx, uu, -c, dv);
      const std::array<double, 2> w0{dot(psi_L, uu), dot(psi_L, vv)};
      const std::array<double, 2> w1{dot(psi_R, uu), dot(psi_R, vv)};
      const auto d0 = g0(t);
      const auto d1 = g1(t);
      for (int r = 0; r < 2; ++r) {
        const double e0 = Pi0[r][0] * w0[0] + Pi0[r][1] * w0[1] - p0[r] * d0[0];
        const double e1 = Pi1[r][0] * w1[0] + Pi1[r][1] * w1[1] - p1[r] * d1[1];
        Vector& dst = r == 0 ? du : dv;
        simd::axpy(e0, delta_L.data(), dst.data(), n);
        simd::axpy(e1, delta_R.data(), dst.data(), n);
      }
      out.resize(2 * n);
      std::copy(du.begin(), du.end(), out.begin());
      std::copy(dv.begin(), dv.end(), out.begin() + n);
      return;
    }
    case OperatorVariant::Usual2D:
    case OperatorVariant::SAT2D: {
      const bool inject = variant == OperatorVariant::Usual2D;
      Vector v(u);
      const double gv = g(t);
      if (inject)
        for (auto i : west) v[i] = gv;
      Vector dy(n);
      scaled_matvec(Dx, v, -a2d[0], out);
      if (a2d[1] != 0.0) {
        matvec(Dy, v, dy);
        simd::axpy(-a2d[1], dy.data(), out.data(), n);
      }
      if (inject) {
        for (auto i : west) out[i] = 0.0;
      } else {
        for (auto i : west) out[i] -= 0.5 * (u[i] - gv) / H[i];
      }
      return;
    }
  }
}

void SemidiscreteOperator::enforce(Vector& u, double t) const {
  const std::size_t n = basis->size();
  switch (variant) {
    case OperatorVariant::Usual1D:
      u[inflow_index] = periodic ? u[inflow_index == 0 ? n - 1 : 0] : g(t);
      return;
    case OperatorVariant::VarCoeff1D:
      if (strong) u[0] = g(t);
      return;
    case OperatorVariant::Usual2D: {
      const double gv = g(t);
      for (auto i : west) u[i] = gv;
      return;
    }
    default: return;
  }
}

namespace {

void require(const SemidiscreteOperator& op, OperatorVariant v) {
  if (op.variant != v)
    throw ConfigError(std::string("operator variant is ") + variant_name(op.variant) + ", expected " + variant_name(v));
}

Vector eval(const SemidiscreteOperator& op, const Vector& u, double t) {
  Vector out;
  op.rhs(u, t, out);
  return out;
}

}  // namespace

Vector rhs_usual_1d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::Usual1D);
  return eval(op, u, t);
}
Vector rhs_fr_1d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::FR1D);
  return eval(op, u, t);
}
Vector rhs_sat_1d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::SAT1D);
  return eval(op, u, t);
}
Vector rhs_varcoeff_1d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::VarCoeff1D);
  return eval(op, u, t);
}
Vector rhs_sat_system(const SemidiscreteOperator& op, const Vector& state, double t) {
  require(op, OperatorVariant::SATSystem1D);
  return eval(op, state, t);
}
Vector rhs_usual_2d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::Usual2D);
  return eval(op, u, t);
}
Vector rhs_sat_2d(const SemidiscreteOperator& op, const Vector& u, double t) {
  require(op, OperatorVariant::SAT2D);
  return eval(op, u, t);
}

}  // namespace rbfadv
