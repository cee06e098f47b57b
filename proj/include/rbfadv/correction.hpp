#pragma once

#include <algorithm>
#include <memory>

#include "rbfadv/quadrature.hpp"

namespace rbfadv {

struct CorrectionOptions {
  bool truncated_svd = false;
  double tsvd_rel_tol = 1e-12;
};

struct CorrectionResiduals {
  double system_L = 0.0;      // |A gamma_L - rhs_L|_inf
  double system_R = 0.0;
  double boundary_L = 0.0;    // max(|c_L(x_L) - 1|, |c_L(x_R)|)
  double boundary_R = 0.0;
  double stability_L = 0.0;   // max_k |int psi_k c_L' + psi_k(x_L)|
  double stability_R = 0.0;   // max_k |int psi_k c_R' - psi_k(x_R)|
  double max_cL() const { return std::max(boundary_L, stability_L); }
  double max_cR() const { return std::max(boundary_R, stability_R); }
};

// c_L = sum_j gamma_L[j] psi~_j, c_R likewise, over the auxiliary basis.
struct CorrectionFunctions {
  std::shared_ptr<const NodalBasis> aux;
  Vector gamma_L;
  Vector gamma_R;
  DenseMatrix A;
  double cond_A = 0.0;
  bool verified = false;
  CorrectionResiduals residuals;

  double c_L(double x) const;
  double c_R(double x) const;
  Vector dc_L(const std::vector<double>& x) const;
  Vector dc_R(const std::vector<double>& x) const;
};

// N+2 equidistant centers on the domain of nb, same kernel and degree bound.
NodalBasis auxiliary_basis(const NodalBasis& nb);

CorrectionFunctions build_corrections(const NodalBasis& nb, const NodalBasis& aux, const QuadratureRule& rule,
                                      const CorrectionOptions& opts = {});

// Recomputes every defining condition by fresh quadrature; marks cf verified.
CorrectionResiduals verify_corrections(CorrectionFunctions& cf, const NodalBasis& nb, const QuadratureRule& rule);

}  // namespace rbfadv
