#include <algorithm>
#include <cmath>

#include "rbfadv/quadrature.hpp"
#include "rbfadv/simd.hpp"

namespace rbfadv {

namespace {

std::vector<double> unique_breaks(std::vector<double> b) {
  std::sort(b.begin(), b.end());
  const double scale = std::max(std::abs(b.front()), std::abs(b.back())) + 1.0;
  std::vector<double> out;
  for (double v : b)
    if (out.empty() || v - out.back() > 1e-13 * scale) out.push_back(v);
  return out;
}

// Sum over points of w_q * features(x_q), then C^T of that.
template <class PointsFn>
Vector integrate_cardinals(const NodalBasis& nb, std::size_t nq, PointsFn&& point_weight) {
  const std::size_t ne = nb.expansion_size();
  std::vector<long double> feat(ne), acc(ne, 0.0L);
  for (std::size_t q = 0; q < nq; ++q) {
    auto [x, w] = point_weight(q);
    nb.features(x, feat.data());
    for (std::size_t i = 0; i < ne; ++i) acc[i] += w * feat[i];
  }
  return nb.combine(acc.data());
}

std::vector<Point> as_points(const std::vector<double>& x) {
  std::vector<Point> p;
  p.reserve(x.size());
  for (double v : x) p.push_back({v, 0.0});
  return p;
}

}  // namespace

PointRule1D composite_rule(std::vector<double> breaks, const QuadratureRule& rule) {
  auto b = unique_breaks(std::move(breaks));
  if (b.size() < 2) throw DomainError("composite rule needs at least two distinct breakpoints");
  PointRule1D r;
  const auto& g = rule.reference;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double h = (b[i + 1] - b[i]) / rule.panels;
    for (int p = 0; p < rule.panels; ++p) {
      const double lo = b[i] + p * h;
      for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        r.x.push_back(lo + 0.5 * h * (g.nodes[k] + 1.0));
        r.w.push_back(0.5 * h * g.weights[k]);
      }
    }
  }
  return r;
}

PointRule2D tensor_rule(const PointRule1D& rx, const PointRule1D& ry) {
  PointRule2D r;
  r.x.reserve(rx.x.size() * ry.x.size());
  r.w.reserve(rx.x.size() * ry.x.size());
  for (std::size_t i = 0; i < rx.x.size(); ++i)
    for (std::size_t j = 0; j < ry.x.size(); ++j) {
      r.x.push_back({rx.x[i], ry.x[j]});
      r.w.push_back(rx.w[i] * ry.w[j]);
    }
  return r;
}

PointRule1D basis_rule(const NodalBasis& nb, const QuadratureRule& rule, const NodalBasis* other) {
  std::vector<double> b = nb.centers().coordinates(0);
  b.push_back(nb.centers().domain().lo[0]);
  b.push_back(nb.centers().domain().hi[0]);
  if (other) {
    auto o = other->centers().coordinates(0);
    b.insert(b.end(), o.begin(), o.end());
  }
  return composite_rule(std::move(b), rule);
}

PointRule2D basis_rule_2d(const NodalBasis& nb, const QuadratureRule& rule) {
  const Box& box = nb.centers().domain();
  PointRule1D r[2];
  for (int a = 0; a < 2; ++a) {
    auto b = nb.centers().coordinates(a);
    b.push_back(box.lo[a]);
    b.push_back(box.hi[a]);
    r[a] = composite_rule(std::move(b), rule);
  }
  return tensor_rule(r[0], r[1]);
}

DenseMatrix inner_product_deriv_matrix(const NodalBasis& nb, const NodalBasis& other, const QuadratureRule& rule) {
  if (nb.centers().dim() != 1 || other.centers().dim() != 1) throw DimensionError("inner products are 1D only");
  auto qr = basis_rule(nb, rule, &other);
  auto pts = as_points(qr.x);
  DenseMatrix psi = evaluation_matrix(nb, pts);
  DenseMatrix dpsi = derivative_matrix(other, pts, 0);
  DenseMatrix k(nb.size(), other.size());
  for (std::size_t q = 0; q < pts.size(); ++q) {
    const double* pr = psi.row(q);
    const double* dr = dpsi.row(q);
    for (std::size_t i = 0; i < nb.size(); ++i) simd::axpy(qr.w[q] * pr[i], dr, k.row(i), other.size());
  }
  return k;
}

double inner_product_deriv(const NodalBasis& nb, std::size_t k, const NodalBasis& other, std::size_t j,
                           const QuadratureRule& rule) {
  if (k >= nb.size() || j >= other.size()) throw DimensionError("basis index out of range");
  auto qr = basis_rule(nb, rule, &other);
  double s = 0.0;
  for (std::size_t q = 0; q < qr.x.size(); ++q) {
    Point x{qr.x[q], 0.0};
    s += qr.w[q] * nb.values(x)[k] * other.derivatives(x, 0)[j];
  }
  return s;
}

Vector mass_vector(const NodalBasis& nb, const QuadratureRule& rule) {
  if (nb.centers().dim() == 1) {
    auto qr = basis_rule(nb, rule);
    return integrate_cardinals(nb, qr.x.size(), [&](std::size_t q) {
      return std::pair<Point, double>{Point{qr.x[q], 0.0}, qr.w[q]};
    });
  }
  auto qr = basis_rule_2d(nb, rule);
  return integrate_cardinals(nb, qr.x.size(), [&](std::size_t q) { return std::pair<Point, double>{qr.x[q], qr.w[q]}; });
}

std::vector<std::size_t> nonpositive_entries(const Vector& h) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!(h[i] > 0.0)) idx.push_back(i);
  return idx;
}

DenseMatrix gram_matrix(const NodalBasis& nb, const QuadratureRule& rule) {
  if (nb.centers().dim() != 1) throw DimensionError("gram_matrix is 1D only");
  auto qr = basis_rule(nb, rule);
  DenseMatrix psi = evaluation_matrix(nb, as_points(qr.x));
  const std::size_t n = nb.size();
  DenseMatrix m(n, n);
  for (std::size_t q = 0; q < qr.x.size(); ++q) {
    const double* pr = psi.row(q);
    for (std::size_t i = 0; i < n; ++i) simd::axpy(qr.w[q] * pr[i], pr, m.row(i), n);
  }
  return m;
}

double energy(const NodalBasis& nb, const Vector& u, const QuadratureRule& rule) {
  const Expansion coef = nb.expansion(u);
  double s = 0.0;
  if (nb.centers().dim() == 1) {
    auto qr = basis_rule(nb, rule);
    for (std::size_t q = 0; q < qr.x.size(); ++q) {
      double v = nb.evaluate_expansion(coef, {qr.x[q], 0.0});
      s += qr.w[q] * v * v;
    }
  } else {
    auto qr = basis_rule_2d(nb, rule);
    for (std::size_t q = 0; q < qr.x.size(); ++q) {
      double v = nb.evaluate_expansion(coef, qr.x[q]);
      s += qr.w[q] * v * v;
    }
  }
  return s;
}

}  // namespace rbfadv
