#include <cmath>
#include <numbers>

#include "rbfadv/quadrature.hpp"

namespace rbfadv {

GaussLegendre gauss_legendre_nodes(int n) {
  if (n < 1 || n > 64) throw DomainError("Gauss-Legendre order must be in [1, 64]");
  GaussLegendre g{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    }
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  return g;
}

QuadratureRule QuadratureRule::make(int points, int panels) {
  if (panels < 1) throw DomainError("panel count must be >= 1");
  return {panels, points, gauss_legendre_nodes(points)};
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureRule& rule) {
  if (!(a < b)) throw DomainError("integrate_1d needs a < b");
  const double h = (b - a) / rule.panels;
  double s = 0.0;
  for (int p = 0; p < rule.panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    double ps = 0.0;
    for (std::size_t i = 0; i < rule.reference.nodes.size(); ++i)
      ps += rule.reference.weights[i] * f(mid + 0.5 * h * rule.reference.nodes[i]);
    s += 0.5 * h * ps;
  }
  return s;
}

}  // namespace rbfadv
