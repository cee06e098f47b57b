#pragma once

#include <cstddef>
#include <vector>

#include "rbfadv/errors.hpp"

namespace rbfadv {

using Vector = std::vector<double>;

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  const std::vector<double>& entries() const { return data_; }

  Vector column(std::size_t j) const;
  DenseMatrix transposed() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
Vector operator*(const DenseMatrix& a, const Vector& x);
void matvec(const DenseMatrix& a, const Vector& x, Vector& y);

double dot(const Vector& x, const Vector& y);
double norm_inf(const Vector& x);

struct LUFactorization {
  DenseMatrix factors;             // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm;   // row i of PA is row perm[i] of A
  bool singular = false;
};

// Partial pivoting; singular iff some pivot < 1e-14 * max|m_ij|.
LUFactorization lu_factor(const DenseMatrix& m);
Vector solve(const LUFactorization& f, const Vector& rhs);
DenseMatrix solve(const LUFactorization& f, const DenseMatrix& rhs);

std::vector<double> singular_values(const DenseMatrix& m);  // descending
// sigma_max / sigma_min; +inf when sigma_min underflows to zero.
double condition_number(const DenseMatrix& m);

// Minimum-norm solve discarding singular values below rel_tol * sigma_max.
Vector truncated_svd_solve(const DenseMatrix& m, const Vector& rhs, double rel_tol);

// Symmetric eigenvalues, ascending.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

}  // namespace rbfadv
