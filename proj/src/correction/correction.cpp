#include <cmath>
#include <sstream>

#include "rbfadv/correction.hpp"

namespace rbfadv {

namespace {

double combine(const NodalBasis& b, const Vector& g, double x) { return dot(b.values({x, 0.0}), g); }

Vector combine_deriv(const NodalBasis& b, const Vector& g, const std::vector<double>& x) {
  std::vector<Point> pts;
  for (double v : x) pts.push_back({v, 0.0});
  return derivative_matrix(b, pts, 0) * g;
}

}  // namespace

double CorrectionFunctions::c_L(double x) const { return combine(*aux, gamma_L, x); }
double CorrectionFunctions::c_R(double x) const { return combine(*aux, gamma_R, x); }
Vector CorrectionFunctions::dc_L(const std::vector<double>& x) const { return combine_deriv(*aux, gamma_L, x); }
Vector CorrectionFunctions::dc_R(const std::vector<double>& x) const { return combine_deriv(*aux, gamma_R, x); }

NodalBasis auxiliary_basis(const NodalBasis& nb) {
  const Box& box = nb.centers().domain();
  return NodalBasis(CenterSet::equidistant(nb.size() + 2, box.lo[0], box.hi[0]), nb.kernel(),
                    nb.poly().degree_bound());
}

CorrectionFunctions build_corrections(const NodalBasis& nb, const NodalBasis& aux, const QuadratureRule& rule,
                                      const CorrectionOptions& opts) {
  if (nb.centers().dim() != 1) throw DimensionError("correction functions are 1D only");
  const std::size_t n = nb.size();
  if (aux.size() != n + 2) throw DimensionError("auxiliary basis must have N+2 centers");
  const double xl = nb.centers().domain().lo[0];
  const double xr = nb.centers().domain().hi[0];
  const auto& ac = aux.centers();
  if (std::abs(ac[0][0] - xl) > 1e-14 || std::abs(ac[n + 1][0] - xr) > 1e-14)
    throw DimensionError("auxiliary centers must include both boundary points");

  DenseMatrix k = inner_product_deriv_matrix(nb, aux, rule);
  Vector rl = aux.values({xl, 0.0});
  Vector rr = aux.values({xr, 0.0});
  DenseMatrix a(n + 2, n + 2);
  for (std::size_t j = 0; j < n + 2; ++j) {
    a(0, j) = rl[j];
    a(1, j) = rr[j];
    for (std::size_t i = 0; i < n; ++i) a(i + 2, j) = k(i, j);
  }
  Vector psil = nb.values({xl, 0.0});
  Vector psir = nb.values({xr, 0.0});
  Vector bl(n + 2), br(n + 2);
  bl[0] = 1.0;
  br[1] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    bl[i + 2] = -psil[i];
    br[i + 2] = psir[i];
  }

  CorrectionFunctions cf;
  cf.aux = std::make_shared<const NodalBasis>(aux);
  cf.cond_A = condition_number(a);
  if (opts.truncated_svd) {
    cf.gamma_L = truncated_svd_solve(a, bl, opts.tsvd_rel_tol);
    cf.gamma_R = truncated_svd_solve(a, br, opts.tsvd_rel_tol);
  } else {
    auto lu = lu_factor(a);
    if (lu.singular) {
      std::ostringstream os;
      os << "singular correction matrix (kernel " << nb.kernel().name() << ", N=" << n << ", cond=" << cf.cond_A << ")";
      throw CorrectionError(os.str(), cf.cond_A);
    }
    cf.gamma_L = solve(lu, bl);
    cf.gamma_R = solve(lu, br);
  }
  Vector rsl = a * cf.gamma_L;
  Vector rsr = a * cf.gamma_R;
  for (std::size_t i = 0; i < n + 2; ++i) {
    cf.residuals.system_L = std::max(cf.residuals.system_L, std::abs(rsl[i] - bl[i]));
    cf.residuals.system_R = std::max(cf.residuals.system_R, std::abs(rsr[i] - br[i]));
  }
  cf.A = std::move(a);
  return cf;
}

CorrectionResiduals verify_corrections(CorrectionFunctions& cf, const NodalBasis& nb, const QuadratureRule& rule) {
  const double xl = nb.centers().domain().lo[0];
  const double xr = nb.centers().domain().hi[0];
  CorrectionResiduals r = cf.residuals;
  r.boundary_L = std::max(std::abs(cf.c_L(xl) - 1.0), std::abs(cf.c_L(xr)));
  r.boundary_R = std::max(std::abs(cf.c_R(xl)), std::abs(cf.c_R(xr) - 1.0));

  auto qr = basis_rule(nb, rule, cf.aux.get());
  std::vector<Point> pts;
  for (double v : qr.x) pts.push_back({v, 0.0});
  DenseMatrix psi = evaluation_matrix(nb, pts);
  Vector dl = cf.dc_L(qr.x);
  Vector dr = cf.dc_R(qr.x);
  Vector il(nb.size(), 0.0), ir(nb.size(), 0.0);
  for (std::size_t q = 0; q < pts.size(); ++q)
    for (std::size_t k = 0; k < nb.size(); ++k) {
      il[k] += qr.w[q] * psi(q, k) * dl[q];
      ir[k] += qr.w[q] * psi(q, k) * dr[q];
    }
  Vector psil = nb.values({xl, 0.0});
  Vector psir = nb.values({xr, 0.0});
  r.stability_L = 0.0;
  r.stability_R = 0.0;
  for (std::size_t k = 0; k < nb.size(); ++k) {
    r.stability_L = std::max(r.stability_L, std::abs(il[k] + psil[k]));
    r.stability_R = std::max(r.stability_R, std::abs(ir[k] - psir[k]));
  }
  cf.residuals = r;
  cf.verified = true;
  return r;
}

}  // namespace rbfadv
