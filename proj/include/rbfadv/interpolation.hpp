#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "rbfadv/kernels.hpp"
#include "rbfadv/linalg.hpp"

namespace rbfadv {

using Point = std::array<double, 2>;  // 1D points use only [0]

struct Box {
  Point lo{0.0, 0.0};
  Point hi{1.0, 1.0};
};

class CenterSet {
 public:
  // 1D centers, sorted on construction; must be distinct.
  static CenterSet line(std::vector<double> x, double lo, double hi);
  static CenterSet equidistant(std::size_t n, double lo, double hi);
  // n x n tensor grid including the edges, x-major (index = i*n + j for x_i, y_j).
  static CenterSet grid2d(std::size_t n, const Box& box = {});
  static CenterSet scattered2d(std::vector<Point> pts, const Box& box);

  int dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  std::vector<double> coordinates(int axis) const;
  double h() const { return h_; }
  const Box& domain() const { return box_; }

 private:
  CenterSet(int dim, std::vector<Point> pts, const Box& box);
  int dim_ = 1;
  std::vector<Point> pts_;
  double h_ = 0.0;
  Box box_;
};

// Monomials of total degree < m in coordinates mapped affinely onto [-1,1]^d.
class PolynomialSpace {
 public:
  PolynomialSpace(int dim, int m, const Box& domain);

  int dim() const { return dim_; }
  int degree_bound() const { return m_; }
  std::size_t size() const { return exps_.size(); }
  const std::vector<std::array<int, 2>>& exponents() const { return exps_; }

  void values(const Point& x, double* out) const;
  void derivatives(const Point& x, int axis, double* out) const;
  void values(const Point& x, long double* out) const;
  void derivatives(const Point& x, int axis, long double* out) const;

 private:
  int dim_;
  int m_;
  Box box_;
  std::vector<std::array<int, 2>> exps_;
};

DenseMatrix assemble_vandermonde(const CenterSet& centers, const Kernel& kernel, const PolynomialSpace& poly);

// Throws DegenerateCentersError if the polynomial block is rank deficient (1e-10 relative).
void check_unisolvent(const CenterSet& centers, const PolynomialSpace& poly);

// Cardinal functions psi_k with psi_k(x_n) = delta_kn: psi(x) = first N entries of V^{-1} f(x),
// V symmetric. PHS coefficients grow like h^(1-2k) and cancel on evaluation, so every
// evaluation is a long double solve against the factored V rather than a product with C.
using Expansion = std::vector<long double>;

class NodalBasis {
 public:
  NodalBasis(CenterSet centers, Kernel kernel, int m);

  const CenterSet& centers() const { return centers_; }
  const Kernel& kernel() const { return kernel_; }
  const PolynomialSpace& poly() const { return poly_; }
  std::size_t size() const { return centers_.size(); }
  std::size_t expansion_size() const { return centers_.size() + poly_.size(); }
  const DenseMatrix& coefficients() const { return coef_; }  // rounded copy
  const LUFactorization& vandermonde_lu() const { return lu_; }
  double vandermonde_condition() const { return vcond_; }

  // Raw expansion features [phi(|x - x_n|) ..., p_i(x) ...] and their partial derivatives.
  void features(const Point& x, double* out) const;
  void feature_derivatives(const Point& x, int axis, double* out) const;
  void features(const Point& x, long double* out) const;
  void feature_derivatives(const Point& x, int axis, long double* out) const;

  // (alpha, beta) of the interpolant through nodal values u.
  Expansion expansion(const Vector& u) const;
  double evaluate_expansion(const Expansion& coef, const Point& x) const;
  double evaluate_expansion_derivative(const Expansion& coef, const Point& x, int axis) const;

  // sum_i f_i C(i, k) for k = 0..N-1, given feature values (or feature integrals) f.
  Vector combine(const long double* f) const;
  // Row q of the result is combine(f_q) for rows f_q of the (rows x expansion_size) array.
  DenseMatrix combine_rows(const std::vector<long double>& f, std::size_t rows) const;
  Vector values(const Point& x) const;                 // psi_k(x), k = 0..N-1
  Vector derivatives(const Point& x, int axis) const;  // d psi_k / dx_axis

 private:
  CenterSet centers_;
  Kernel kernel_;
  PolynomialSpace poly_;
  struct Factor;
  std::shared_ptr<const Factor> factor_;
  DenseMatrix coef_;
  LUFactorization lu_;
  double vcond_ = 0.0;
};

NodalBasis build_nodal_basis(const CenterSet& centers, const Kernel& kernel, int m);

double evaluate(const NodalBasis& nb, const Vector& u, const Point& x);
double evaluate(const NodalBasis& nb, const Vector& u, double x);
double evaluate_derivative(const NodalBasis& nb, const Vector& u, const Point& x, int axis);
double evaluate_derivative(const NodalBasis& nb, const Vector& u, double x);

// D(n,k) = d psi_k / dx_axis at x_n.
DenseMatrix differentiation_matrix(const NodalBasis& nb, int axis = 0);
// Rows psi(x_q) (or derivatives) for arbitrary points.
DenseMatrix evaluation_matrix(const NodalBasis& nb, const std::vector<Point>& pts);
DenseMatrix derivative_matrix(const NodalBasis& nb, const std::vector<Point>& pts, int axis = 0);

}  // namespace rbfadv
