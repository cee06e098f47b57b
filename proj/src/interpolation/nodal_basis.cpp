#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "rbfadv/interpolation.hpp"

namespace rbfadv {

namespace {

using MatLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class T>
T distance(const Point& a, const Point& b, int dim) {
  const T dx = T(a[0]) - T(b[0]);
  if (dim == 1) return std::abs(dx);
  const T dy = T(a[1]) - T(b[1]);
  return std::sqrt(dx * dx + dy * dy);
}

template <class T>
void fill_features(const NodalBasis& nb, const Point& x, T* out) {
  const auto& c = nb.centers();
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) out[j] = phi(nb.kernel(), distance<T>(x, c[j], c.dim()));
  nb.poly().values(x, out + n);
}

template <class T>
void fill_feature_derivatives(const NodalBasis& nb, const Point& x, int axis, T* out) {
  const auto& c = nb.centers();
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    const T r = distance<T>(x, c[j], c.dim());
    out[j] = r == 0 ? T(0) : phi_d1(nb.kernel(), r) * (T(x[axis]) - T(c[j][axis])) / r;
  }
  nb.poly().derivatives(x, axis, out + n);
}

}  // namespace

struct NodalBasis::Factor {
  Eigen::PartialPivLU<MatLD> lu;
};

DenseMatrix assemble_vandermonde(const CenterSet& centers, const Kernel& kernel, const PolynomialSpace& poly) {
  const std::size_t n = centers.size();
  const std::size_t q = poly.size();
  if (n < q) throw DegenerateCentersError("fewer centers than polynomial terms");
  check_unisolvent(centers, poly);
  DenseMatrix v(n + q, n + q);
  std::vector<double> p(q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) v(i, j) = phi(kernel, distance<double>(centers[i], centers[j], centers.dim()));
    poly.values(centers[i], p.data());
    for (std::size_t a = 0; a < q; ++a) {
      v(i, n + a) = p[a];
      v(n + a, i) = p[a];
    }
  }
  return v;
}

void check_unisolvent(const CenterSet& centers, const PolynomialSpace& poly) {
  const std::size_t n = centers.size();
  const std::size_t q = poly.size();
  if (q == 0) return;
  if (n < q) throw DegenerateCentersError("fewer centers than polynomial terms");
  DenseMatrix p(q, n);
  std::vector<double> row(q);
  for (std::size_t j = 0; j < n; ++j) {
    poly.values(centers[j], row.data());
    for (std::size_t a = 0; a < q; ++a) p(a, j) = row[a];
  }
  auto s = singular_values(p);
  std::size_t rank = 0;
  for (double v : s)
    if (v > 1e-10 * s.front()) ++rank;
  if (rank < q) {
    std::ostringstream os;
    os << "centers are not unisolvent for degree < " << poly.degree_bound() << " (rank " << rank << " of " << q << ")";
    throw DegenerateCentersError(os.str());
  }
}

NodalBasis::NodalBasis(CenterSet centers, Kernel kernel, int m)
    : centers_(std::move(centers)), kernel_(kernel), poly_(centers_.dim(), m, centers_.domain()) {
  if (m < kernel_.cpd_order()) {
    std::ostringstream os;
    os << "polynomial degree bound m=" << m << " is below the kernel's conditional order " << kernel_.cpd_order();
    throw ConfigError(os.str());
  }
  DenseMatrix v = assemble_vandermonde(centers_, kernel_, poly_);
  lu_ = lu_factor(v);
  vcond_ = condition_number(v);
  if (lu_.singular) {
    std::ostringstream os;
    os << "singular Vandermonde matrix (kernel " << kernel_.name() << ", N=" << centers_.size() << ", m=" << m << ")";
    throw SingularSystemError(os.str());
  }
  const std::size_t n = centers_.size();
  const std::size_t ne = expansion_size();
  MatLD vl = MatLD::Zero(ne, ne);
  std::vector<long double> row(ne);
  for (std::size_t i = 0; i < n; ++i) {
    features(centers_[i], row.data());
    for (std::size_t j = 0; j < ne; ++j) {
      vl(i, j) = row[j];
      if (j >= n) vl(j, i) = row[j];
    }
  }
  auto f = std::make_shared<Factor>();
  f->lu.compute(vl);
  factor_ = std::move(f);
  MatLD rhs = MatLD::Zero(ne, n);
  for (std::size_t i = 0; i < n; ++i) rhs(i, i) = 1;
  MatLD c = factor_->lu.solve(rhs);
  coef_ = DenseMatrix(ne, n);
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < n; ++j) coef_(i, j) = static_cast<double>(c(i, j));
}

void NodalBasis::features(const Point& x, double* out) const { fill_features(*this, x, out); }
void NodalBasis::features(const Point& x, long double* out) const { fill_features(*this, x, out); }
void NodalBasis::feature_derivatives(const Point& x, int axis, double* out) const {
  fill_feature_derivatives(*this, x, axis, out);
}
void NodalBasis::feature_derivatives(const Point& x, int axis, long double* out) const {
  fill_feature_derivatives(*this, x, axis, out);
}

Expansion NodalBasis::expansion(const Vector& u) const {
  if (u.size() != size()) throw DimensionError("nodal value count does not match basis size");
  Eigen::Matrix<long double, Eigen::Dynamic, 1> rhs = Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(expansion_size());
  for (std::size_t i = 0; i < size(); ++i) rhs(i) = u[i];
  Eigen::Matrix<long double, Eigen::Dynamic, 1> c = factor_->lu.solve(rhs);
  return Expansion(c.data(), c.data() + c.size());
}

double NodalBasis::evaluate_expansion(const Expansion& coef, const Point& x) const {
  std::vector<long double> f(expansion_size());
  features(x, f.data());
  long double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * coef[i];
  return static_cast<double>(s);
}

double NodalBasis::evaluate_expansion_derivative(const Expansion& coef, const Point& x, int axis) const {
  std::vector<long double> f(expansion_size());
  feature_derivatives(x, axis, f.data());
  long double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * coef[i];
  return static_cast<double>(s);
}

Vector NodalBasis::combine(const long double* f) const {
  Eigen::Map<const Eigen::Matrix<long double, Eigen::Dynamic, 1>> rhs(f, Eigen::Index(expansion_size()));
  Eigen::Matrix<long double, Eigen::Dynamic, 1> w = factor_->lu.solve(rhs);
  Vector out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = static_cast<double>(w(k));
  return out;
}

DenseMatrix NodalBasis::combine_rows(const std::vector<long double>& f, std::size_t rows) const {
  const std::size_t ne = expansion_size();
  if (f.size() != rows * ne) throw DimensionError("feature block has the wrong size");
  Eigen::Map<const MatLD> fm(f.data(), Eigen::Index(rows), Eigen::Index(ne));
  MatLD w = factor_->lu.solve(fm.transpose());
  DenseMatrix out(rows, size());
  for (std::size_t q = 0; q < rows; ++q)
    for (std::size_t k = 0; k < size(); ++k) out(q, k) = static_cast<double>(w(k, q));
  return out;
}

Vector NodalBasis::values(const Point& x) const {
  std::vector<long double> f(expansion_size());
  features(x, f.data());
  return combine(f.data());
}

Vector NodalBasis::derivatives(const Point& x, int axis) const {
  std::vector<long double> f(expansion_size());
  feature_derivatives(x, axis, f.data());
  return combine(f.data());
}

NodalBasis build_nodal_basis(const CenterSet& centers, const Kernel& kernel, int m) { return NodalBasis(centers, kernel, m); }

double evaluate(const NodalBasis& nb, const Vector& u, const Point& x) {
  return nb.evaluate_expansion(nb.expansion(u), x);
}

double evaluate(const NodalBasis& nb, const Vector& u, double x) { return evaluate(nb, u, Point{x, 0.0}); }

double evaluate_derivative(const NodalBasis& nb, const Vector& u, const Point& x, int axis) {
  if (axis < 0 || axis >= nb.centers().dim()) throw DimensionError("axis out of range");
  return nb.evaluate_expansion_derivative(nb.expansion(u), x, axis);
}

double evaluate_derivative(const NodalBasis& nb, const Vector& u, double x) {
  return evaluate_derivative(nb, u, Point{x, 0.0}, 0);
}

DenseMatrix evaluation_matrix(const NodalBasis& nb, const std::vector<Point>& pts) {
  const std::size_t ne = nb.expansion_size();
  std::vector<long double> f(pts.size() * ne);
  for (std::size_t q = 0; q < pts.size(); ++q) nb.features(pts[q], f.data() + q * ne);
  return nb.combine_rows(f, pts.size());
}

DenseMatrix derivative_matrix(const NodalBasis& nb, const std::vector<Point>& pts, int axis) {
  if (axis < 0 || axis >= nb.centers().dim()) throw DimensionError("axis out of range");
  const std::size_t ne = nb.expansion_size();
  std::vector<long double> f(pts.size() * ne);
  for (std::size_t q = 0; q < pts.size(); ++q) nb.feature_derivatives(pts[q], axis, f.data() + q * ne);
  return nb.combine_rows(f, pts.size());
}

DenseMatrix differentiation_matrix(const NodalBasis& nb, int axis) {
  return derivative_matrix(nb, nb.centers().points(), axis);
}

}  // namespace rbfadv
