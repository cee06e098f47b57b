#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "rbfadv/linalg.hpp"

namespace rbfadv {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMat> view(const DenseMatrix& m) { return {m.data(), Eigen::Index(m.rows()), Eigen::Index(m.cols())}; }

}  // namespace

std::vector<double> singular_values(const DenseMatrix& m) {
  Eigen::MatrixXd a = view(m);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double condition_number(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("condition_number needs a square matrix");
  auto s = singular_values(m);
  if (s.front() == 0.0) throw DomainError("condition_number of the zero matrix");
  if (s.back() <= std::numeric_limits<double>::min()) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

Vector truncated_svd_solve(const DenseMatrix& m, const Vector& rhs, double rel_tol) {
  if (rhs.size() != m.rows()) throw DimensionError("truncated_svd_solve: rhs length mismatch");
  Eigen::MatrixXd a = view(m);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(rhs.data(), Eigen::Index(rhs.size()));
  Eigen::VectorXd c = svd.matrixU().transpose() * b;
  const double cut = rel_tol * s(0);
  for (Eigen::Index i = 0; i < s.size(); ++i) c(i) = s(i) > cut ? c(i) / s(i) : 0.0;
  Eigen::VectorXd x = svd.matrixV() * c;
  return {x.data(), x.data() + x.size()};
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("symmetric_eigenvalues needs a square matrix");
  Eigen::MatrixXd a = view(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto& e = es.eigenvalues();
  return {e.data(), e.data() + e.size()};
}

}  // namespace rbfadv
