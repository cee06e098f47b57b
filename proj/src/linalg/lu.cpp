#include <cmath>
#include <numeric>
#include <utility>

#include "rbfadv/linalg.hpp"

namespace rbfadv {

namespace {
constexpr double kPivotTol = 1e-14;
}

LUFactorization lu_factor(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("lu_factor needs a square matrix");
  const std::size_t n = m.rows();
  LUFactorization f{m, std::vector<std::size_t>(n), false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double scale = m.max_abs();
  const double tol = kPivotTol * scale;
  DenseMatrix& a = f.factors;
  if (scale == 0.0) {
    f.singular = true;
    return f;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    }
    if (best < tol) {
      f.singular = true;
      continue;
    }
    if (p != k) {
      std::swap_ranges(a.row(k), a.row(k) + n, a.row(p));
      std::swap(f.perm[k], f.perm[p]);
    }
    const double piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double l = a(i, k) / piv;
      a(i, k) = l;
      if (l == 0.0) continue;
      double* ri = a.row(i);
      const double* rk = a.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
    }
  }
  return f;
}

Vector solve(const LUFactorization& f, const Vector& rhs) {
  const std::size_t n = f.factors.rows();
  if (rhs.size() != n) throw DimensionError("solve: rhs length mismatch");
  if (f.singular) throw SingularSystemError("solve: factorization is singular");
  const DenseMatrix& a = f.factors;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[f.perm[i]];
    const double* ri = a.row(i);
    for (std::size_t j = 0; j < i; ++j) s -= ri[j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    const double* ri = a.row(i);
    for (std::size_t j = i + 1; j < n; ++j) s -= ri[j] * x[j];
    x[i] = s / ri[i];
  }
  return x;
}

DenseMatrix solve(const LUFactorization& f, const DenseMatrix& rhs) {
  if (rhs.rows() != f.factors.rows()) throw DimensionError("solve: rhs rows mismatch");
  DenseMatrix x(rhs.rows(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    Vector c = solve(f, rhs.column(j));
    for (std::size_t i = 0; i < c.size(); ++i) x(i, j) = c[i];
  }
  return x;
}

}  // namespace rbfadv
