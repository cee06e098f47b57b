#include <cmath>
#include <sstream>

#include "rbfadv/operators.hpp"

namespace rbfadv {

namespace {

constexpr double kBoundaryTol = 1e-12;

SemidiscreteOperator base_1d(std::shared_ptr<const NodalBasis> nb, OperatorVariant v, const QuadratureRule& rule) {
  if (!nb) throw ConfigError("operator needs a nodal basis");
  if (nb->centers().dim() != 1) throw DimensionError("1D operator needs a 1D basis");
  SemidiscreteOperator op;
  op.variant = v;
  op.basis = nb;
  op.Dx = differentiation_matrix(*nb, 0);
  op.H = mass_vector(*nb, rule);
  op.h = nb->centers().h();
  const Box& box = nb->centers().domain();
  op.psi_L = nb->values({box.lo[0], 0.0});
  op.psi_R = nb->values({box.hi[0], 0.0});
  return op;
}

void check_tau(double tau, const char* side) {
  if (!(tau < -0.5)) {
    std::ostringstream os;
    os << "tau_" << side << "=" << tau << " violates tau < -1/2";
    throw StabilityParameterError(os.str());
  }
}

Vector delta_vector(const SemidiscreteOperator& op, const Vector& psi, DeltaForm form) {
  if (form == DeltaForm::Lumped) {
    Vector d(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) d[i] = psi[i] / op.H[i];
    return d;
  }
  auto lu = lu_factor(op.M);
  if (lu.singular) throw SingularSystemError("Gram matrix is singular; use the lumped delta");
  return solve(lu, psi);
}

void attach_deltas(SemidiscreteOperator& op, DeltaForm form, const QuadratureRule& rule) {
  op.delta = form;
  if (form == DeltaForm::Consistent) op.M = gram_matrix(*op.basis, rule);
  op.delta_L = delta_vector(op, op.psi_L, form);
  op.delta_R = delta_vector(op, op.psi_R, form);
}

bool is_center(const NodalBasis& nb, std::size_t i, double x) { return std::abs(nb.centers()[i][0] - x) <= kBoundaryTol; }

}  // namespace

SemidiscreteOperator make_usual_1d(std::shared_ptr<const NodalBasis> nb, double a, std::function<double(double)> g,
                                   bool periodic, const QuadratureRule& rule) {
  auto op = base_1d(std::move(nb), OperatorVariant::Usual1D, rule);
  op.a = a;
  op.lambda_max = std::abs(a);
  op.periodic = periodic;
  op.g = std::move(g);
  const auto& b = *op.basis;
  const Box& box = b.centers().domain();
  const std::size_t n = b.size();
  op.inflow_index = a >= 0.0 ? 0 : n - 1;
  const double xb = a >= 0.0 ? box.lo[0] : box.hi[0];
  if (!is_center(b, op.inflow_index, xb))
    throw ConfigError("strong boundary injection needs a center on the inflow boundary");
  if (periodic && !(is_center(b, 0, box.lo[0]) && is_center(b, n - 1, box.hi[0])))
    throw ConfigError("periodic injection needs centers on both boundaries");
  if (!periodic && !op.g) throw ConfigError("inflow data missing");
  return op;
}

SemidiscreteOperator make_fr_1d(std::shared_ptr<const NodalBasis> nb, std::shared_ptr<const CorrectionFunctions> cf,
                                double a, std::function<double(double)> g, bool periodic, const QuadratureRule& rule) {
  if (!cf || !cf->verified) throw ConfigError("FR operator refuses unverified correction functions");
  auto op = base_1d(std::move(nb), OperatorVariant::FR1D, rule);
  op.a = a;
  op.lambda_max = std::abs(a);
  op.periodic = periodic;
  op.g = std::move(g);
  if (!periodic && !op.g) throw ConfigError("inflow data missing");
  op.corrections = cf;
  auto x = op.basis->centers().coordinates(0);
  op.dcL = cf->dc_L(x);
  op.dcR = cf->dc_R(x);
  return op;
}

SemidiscreteOperator make_sat_1d(std::shared_ptr<const NodalBasis> nb, double a, std::function<double(double)> g,
                                 bool periodic, const SatOptions& opts, const QuadratureRule& rule) {
  check_tau(opts.tau_L, "L");
  check_tau(opts.tau_R, "R");
  auto op = base_1d(std::move(nb), OperatorVariant::SAT1D, rule);
  op.a = a;
  op.lambda_max = std::abs(a);
  op.periodic = periodic;
  op.g = std::move(g);
  if (!periodic && !op.g) throw ConfigError("inflow data missing");
  op.tau_L = opts.tau_L;
  op.tau_R = opts.tau_R;
  attach_deltas(op, opts.delta, rule);
  return op;
}

SemidiscreteOperator make_varcoeff_1d(std::shared_ptr<const NodalBasis> nb, std::function<double(double)> a_fn,
                                      std::function<double(double)> da_fn, std::function<double(double)> g,
                                      double alpha, bool strong, const SatOptions& opts, const QuadratureRule& rule) {
  if (!a_fn || !da_fn) throw ConfigError("variable coefficient and its derivative are required");
  if (!strong) {
    check_tau(opts.tau_L, "L");
    check_tau(opts.tau_R, "R");
  }
  auto op = base_1d(std::move(nb), OperatorVariant::VarCoeff1D, rule);
  const auto x = op.basis->centers().coordinates(0);
  const Box& box = op.basis->centers().domain();
  op.a_nodes.resize(x.size());
  op.da_nodes.resize(x.size());
  double amax = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    op.a_nodes[i] = a_fn(x[i]);
    op.da_nodes[i] = da_fn(x[i]);
    amax = std::max(amax, std::abs(op.a_nodes[i]));
  }
  op.a_L = a_fn(box.lo[0]);
  op.a_fn = a_fn;
  op.da_fn = da_fn;
  op.a_R = a_fn(box.hi[0]);
  op.lambda_max = amax > 0.0 ? amax : 1.0;
  op.alpha = alpha;
  op.g = std::move(g);
  if (!op.g) throw ConfigError("inflow data missing");
  op.tau_L = opts.tau_L;
  op.tau_R = opts.tau_R;
  op.strong = strong && op.a_L > 0.0;
  if (op.strong && !is_center(*op.basis, 0, box.lo[0]))
    throw ConfigError("strong boundary injection needs a center on the inflow boundary");
  if (!strong) attach_deltas(op, opts.delta, rule);
  return op;
}

SemidiscreteOperator make_sat_system(std::shared_ptr<const NodalBasis> nb, double c,
                                     std::function<std::array<double, 2>(double)> g0,
                                     std::function<std::array<double, 2>(double)> g1, const SystemOptions& opts,
                                     const QuadratureRule& rule) {
  for (double r : {opts.R0, opts.R1})
    if (!(r > 0.0 && r < 1.0)) {
      std::ostringstream os;
      os << "boundary reflection coefficient " << r << " outside (0,1)";
      throw StabilityParameterError(os.str());
    }
  if (!(c > 0.0)) throw ConfigError("wave speed must be positive");
  if (!g0 || !g1) throw ConfigError("boundary data missing");
  auto op = base_1d(std::move(nb), OperatorVariant::SATSystem1D, rule);
  op.c = c;
  op.lambda_max = c;
  op.R0 = opts.R0;
  op.R1 = opts.R1;
  op.g0 = std::move(g0);
  op.g1 = std::move(g1);
  const double s = 1.0 / std::sqrt(2.0);
  // Incoming characteristic w1 = s(u+v) at x_L, w2 = s(u-v) at x_R; penalties act through W.
  const std::array<double, 2> l0{s * (1.0 - opts.R0), s * (1.0 + opts.R0)};
  const std::array<double, 2> l1{s * (1.0 - opts.R1), -s * (1.0 + opts.R1)};
  op.p0 = {-c * s, -c * s};
  op.p1 = {-c * s, c * s};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k) {
      op.Pi0[r][k] = op.p0[r] * l0[k];
      op.Pi1[r][k] = op.p1[r] * l1[k];
    }
  attach_deltas(op, opts.delta, rule);
  auto [b0, b1] = system_boundary_forms(op);
  if (!negative_semidefinite(b0) || !negative_semidefinite(b1))
    throw StabilityParameterError("system boundary forms are not negative semi-definite");
  return op;
}

namespace {

SemidiscreteOperator base_2d(std::shared_ptr<const NodalBasis> nb, OperatorVariant v, std::array<double, 2> a,
                             std::function<double(double)> g, const QuadratureRule& rule) {
  if (!nb) throw ConfigError("operator needs a nodal basis");
  if (nb->centers().dim() != 2) throw DimensionError("2D operator needs a 2D basis");
  if (!(a[0] > 0.0)) throw ConfigError("2D operators support inflow through the west edge only (a1 > 0)");
  if (a[1] != 0.0) throw ConfigError("2D operators support a = (a1, 0) only");
  if (!g) throw ConfigError("inflow data missing");
  SemidiscreteOperator op;
  op.variant = v;
  op.basis = nb;
  op.a2d = a;
  op.g = std::move(g);
  op.Dx = differentiation_matrix(*nb, 0);
  op.Dy = differentiation_matrix(*nb, 1);
  op.H = mass_vector(*nb, rule);
  op.h = nb->centers().h();
  op.lambda_max = std::hypot(a[0], a[1]);
  const double xl = nb->centers().domain().lo[0];
  for (std::size_t i = 0; i < nb->size(); ++i)
    if (std::abs(nb->centers()[i][0] - xl) <= kBoundaryTol) op.west.push_back(i);
  if (op.west.empty()) throw ConfigError("no centers on the inflow edge");
  return op;
}

}  // namespace

SemidiscreteOperator make_usual_2d(std::shared_ptr<const NodalBasis> nb, std::array<double, 2> a,
                                   std::function<double(double)> g, const QuadratureRule& rule) {
  return base_2d(std::move(nb), OperatorVariant::Usual2D, a, std::move(g), rule);
}

SemidiscreteOperator make_sat_2d(std::shared_ptr<const NodalBasis> nb, std::array<double, 2> a,
                                 std::function<double(double)> g, const QuadratureRule& rule) {
  auto op = base_2d(std::move(nb), OperatorVariant::SAT2D, a, std::move(g), rule);
  for (auto i : op.west)
    if (!(op.H[i] > 0.0)) throw ConfigError("nonpositive mass on an inflow node; the penalty is undefined");
  return op;
}

std::pair<Mat2, Mat2> system_boundary_forms(const SemidiscreteOperator& op) {
  if (op.variant != OperatorVariant::SATSystem1D) throw ConfigError("boundary forms need the system operator");
  Mat2 b0{}, b1{};
  const Mat2 a{{{0.0, op.c}, {op.c, 0.0}}};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k) {
      b0[r][k] = a[r][k] + op.Pi0[r][k] + op.Pi0[k][r];
      b1[r][k] = -a[r][k] + op.Pi1[r][k] + op.Pi1[k][r];
    }
  return {b0, b1};
}

bool negative_semidefinite(const Mat2& m, double tol) {
  const double tr = m[0][0] + m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  const double lmax = 0.5 * tr + disc;
  return lmax <= tol;
}

}  // namespace rbfadv
