#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>

#include "rbfadv/correction.hpp"
#include "rbfadv/timestep.hpp"

namespace rbfadv {

enum class OperatorVariant { Usual1D, FR1D, SAT1D, VarCoeff1D, SATSystem1D, Usual2D, SAT2D };

const char* variant_name(OperatorVariant v);

// Discrete boundary delta: Consistent = M^-1 psi(x_b) with the Gram matrix M,
// Lumped = H^-1 psi(x_b) with the mass vector H.
enum class DeltaForm { Consistent, Lumped };

DeltaForm parse_delta_form(const std::string& s);

double upwind(double a, double u_left, double u_right);

using Mat2 = std::array<std::array<double, 2>, 2>;

// Immutable after assembly; all rhs evaluations are pure in (u, t).
struct SemidiscreteOperator final : Semidiscretization {
  OperatorVariant variant = OperatorVariant::Usual1D;
  std::shared_ptr<const NodalBasis> basis;
  DenseMatrix Dx;
  DenseMatrix Dy;
  Vector H;               // mass vector
  DenseMatrix M;          // Gram matrix (1D)
  double h = 0.0;
  double lambda_max = 1.0;
  bool periodic = false;

  // Scalar 1D data.
  double a = 1.0;
  std::function<double(double)> g;     // inflow data at the upwind boundary
  Vector psi_L, psi_R;                 // psi_k(x_L), psi_k(x_R)
  std::size_t inflow_index = 0;        // usual: injected node

  // SAT.
  double tau_L = -1.0;
  double tau_R = -1.0;
  DeltaForm delta = DeltaForm::Consistent;
  Vector delta_L, delta_R;

  // FR.
  std::shared_ptr<const CorrectionFunctions> corrections;
  Vector dcL, dcR;                     // c_L', c_R' at the centers

  // Variable coefficients.
  std::function<double(double)> a_fn, da_fn;
  Vector a_nodes, da_nodes;
  double a_L = 0.0, a_R = 0.0;
  double alpha = 0.5;
  bool strong = false;

  // System.
  double c = 1.0;
  double R0 = 0.5, R1 = 0.5;
  Mat2 Pi0{}, Pi1{};                   // state-to-penalty maps at x_L and x_R
  std::array<double, 2> p0{}, p1{};    // data-to-penalty vectors
  std::function<std::array<double, 2>(double)> g0, g1;

  // 2D.
  std::array<double, 2> a2d{1.0, 0.0};
  std::vector<std::size_t> west;       // nodes on x = lo

  std::size_t state_size() const override;
  void rhs(const Vector& u, double t, Vector& out) const override;
  void enforce(Vector& u, double t) const override;

  // Upwind numerical fluxes at x_L and x_R for the scalar 1D variants.
  std::pair<double, double> boundary_fluxes(const Vector& u, double t) const;
};

struct SatOptions {
  double tau_L = -1.0;
  double tau_R = -1.0;
  DeltaForm delta = DeltaForm::Consistent;
};

struct SystemOptions {
  double R0 = 0.5;
  double R1 = 0.5;
  DeltaForm delta = DeltaForm::Consistent;
};

// Scalar constant-speed problems. `g` is ignored when periodic.
SemidiscreteOperator make_usual_1d(std::shared_ptr<const NodalBasis> nb, double a, std::function<double(double)> g,
                                   bool periodic, const QuadratureRule& rule);
SemidiscreteOperator make_fr_1d(std::shared_ptr<const NodalBasis> nb, std::shared_ptr<const CorrectionFunctions> cf,
                                double a, std::function<double(double)> g, bool periodic, const QuadratureRule& rule);
SemidiscreteOperator make_sat_1d(std::shared_ptr<const NodalBasis> nb, double a, std::function<double(double)> g,
                                 bool periodic, const SatOptions& opts, const QuadratureRule& rule);
// Skew split alpha d(a u) + (1 - alpha)(a' u + a u_x); SAT inflow penalty, or strong injection
// when `strong` (only where a(x_L) > 0).
SemidiscreteOperator make_varcoeff_1d(std::shared_ptr<const NodalBasis> nb, std::function<double(double)> a_fn,
                                      std::function<double(double)> da_fn, std::function<double(double)> g,
                                      double alpha, bool strong, const SatOptions& opts, const QuadratureRule& rule);
// Acoustic system with characteristic penalties; throws when the boundary forms are not NSD.
SemidiscreteOperator make_sat_system(std::shared_ptr<const NodalBasis> nb, double c,
                                     std::function<std::array<double, 2>(double)> g0,
                                     std::function<std::array<double, 2>(double)> g1, const SystemOptions& opts,
                                     const QuadratureRule& rule);
SemidiscreteOperator make_usual_2d(std::shared_ptr<const NodalBasis> nb, std::array<double, 2> a,
                                   std::function<double(double)> g, const QuadratureRule& rule);
SemidiscreteOperator make_sat_2d(std::shared_ptr<const NodalBasis> nb, std::array<double, 2> a,
                                 std::function<double(double)> g, const QuadratureRule& rule);

// Variant-checked entry points.
Vector rhs_usual_1d(const SemidiscreteOperator& op, const Vector& u, double t);
Vector rhs_fr_1d(const SemidiscreteOperator& op, const Vector& u, double t);
Vector rhs_sat_1d(const SemidiscreteOperator& op, const Vector& u, double t);
Vector rhs_varcoeff_1d(const SemidiscreteOperator& op, const Vector& u, double t);
Vector rhs_sat_system(const SemidiscreteOperator& op, const Vector& state, double t);
Vector rhs_usual_2d(const SemidiscreteOperator& op, const Vector& u, double t);
Vector rhs_sat_2d(const SemidiscreteOperator& op, const Vector& u, double t);

// Energy-flux matrices at each end: B0 = A + Pi0 + Pi0^T, B1 = -A + Pi1 + Pi1^T.
std::pair<Mat2, Mat2> system_boundary_forms(const SemidiscreteOperator& op);
bool negative_semidefinite(const Mat2& m, double tol = 1e-12);

// Function-level rates by quadrature of the semidiscrete right-hand side.
// FR: |int L dx - (f_L - f_R)|.
double fr_conservation_residual(const SemidiscreteOperator& op, const Vector& u, double t, const QuadratureRule& rule);
// FR: |h^T L(u) - (f_L - f_R)| using the nodal rhs (reported only).
double fr_conservation_residual_nodal(const SemidiscreteOperator& op, const Vector& u, double t);
// SAT 1D and variable coefficients: 2 int u_N L dx with the exact delta.
double sat_energy_rate(const SemidiscreteOperator& op, const Vector& u, double t, const QuadratureRule& rule);
// 2 u^T M L(u) (reported only).
double sat_energy_rate_nodal(const SemidiscreteOperator& op, const Vector& u, double t);
// Bound -tau_L^2 a g^2 / (1 + 2 tau_L) on the SAT 1D rate.
double sat_energy_bound(const SemidiscreteOperator& op, double t);
// System: d/dt int (u^2 + v^2).
double system_energy_rate(const SemidiscreteOperator& op, const Vector& state, double t, const QuadratureRule& rule);

}  // namespace rbfadv
