#pragma once

#include <functional>
#include <vector>

#include "rbfadv/interpolation.hpp"

namespace rbfadv {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on P_n; 1 <= n <= 64.
GaussLegendre gauss_legendre_nodes(int n);

// `panels` equal subintervals for integrate_1d; for center-aligned rules it is the number
// of subpanels per gap between consecutive breakpoints.
struct QuadratureRule {
  int panels = 1;
  int points = 10;
  GaussLegendre reference;

  static QuadratureRule make(int points = 10, int panels = 1);
};

struct PointRule1D {
  std::vector<double> x;
  std::vector<double> w;
};

struct PointRule2D {
  std::vector<Point> x;
  std::vector<double> w;
};

double integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureRule& rule);

PointRule1D composite_rule(std::vector<double> breaks, const QuadratureRule& rule);
PointRule2D tensor_rule(const PointRule1D& rx, const PointRule1D& ry);

// Panels break at the domain ends and at every center of nb (and of `other` if given).
PointRule1D basis_rule(const NodalBasis& nb, const QuadratureRule& rule, const NodalBasis* other = nullptr);
PointRule2D basis_rule_2d(const NodalBasis& nb, const QuadratureRule& rule);

double inner_product_deriv(const NodalBasis& nb, std::size_t k, const NodalBasis& other, std::size_t j,
                           const QuadratureRule& rule);
// K(k, j) = int psi_k * other_j'.
DenseMatrix inner_product_deriv_matrix(const NodalBasis& nb, const NodalBasis& other, const QuadratureRule& rule);

// h_n = int psi_n; tensor rule in 2D.
Vector mass_vector(const NodalBasis& nb, const QuadratureRule& rule);
std::vector<std::size_t> nonpositive_entries(const Vector& h);

// M(i, j) = int psi_i psi_j (1D).
DenseMatrix gram_matrix(const NodalBasis& nb, const QuadratureRule& rule);

// int u_N^2.
double energy(const NodalBasis& nb, const Vector& u, const QuadratureRule& rule);

}  // namespace rbfadv
