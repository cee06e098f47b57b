#include <cmath>

#include "rbfadv/diagnostics.hpp"

namespace rbfadv {

DiscreteErrors discrete_errors(const Vector& u_num, const Vector& u_exact) {
  if (u_num.size() != u_exact.size()) throw DimensionError("error vectors differ in length");
  if (u_num.empty()) throw DimensionError("error vectors are empty");
  DiscreteErrors e;
  for (std::size_t i = 0; i < u_num.size(); ++i) {
    const double d = std::abs(u_num[i] - u_exact[i]);
    e.l1 += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 /= double(u_num.size());
  return e;
}

double nodal_l2(const Vector& u_num, const Vector& u_exact) {
  if (u_num.size() != u_exact.size()) throw DimensionError("error vectors differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < u_num.size(); ++i) s += (u_num[i] - u_exact[i]) * (u_num[i] - u_exact[i]);
  return std::sqrt(s);
}

double l2_error(const NodalBasis& nb, const Vector& u_num, const std::function<double(const Point&)>& exact,
                const QuadratureRule& rule) {
  const Expansion coef = nb.expansion(u_num);
  double s = 0.0;
  if (nb.centers().dim() == 1) {
    auto qr = basis_rule(nb, rule);
    for (std::size_t q = 0; q < qr.x.size(); ++q) {
      Point x{qr.x[q], 0.0};
      const double d = nb.evaluate_expansion(coef, x) - exact(x);
      s += qr.w[q] * d * d;
    }
  } else {
    auto qr = basis_rule_2d(nb, rule);
    for (std::size_t q = 0; q < qr.x.size(); ++q) {
      const double d = nb.evaluate_expansion(coef, qr.x[q]) - exact(qr.x[q]);
      s += qr.w[q] * d * d;
    }
  }
  return std::sqrt(s);
}

std::vector<double> pairwise_orders(const std::vector<double>& errors) {
  if (errors.size() < 2) throw DimensionError("orders need at least two errors");
  for (double e : errors)
    if (!(e > 0.0)) throw DomainError("orders need positive errors");
  std::vector<double> o;
  for (std::size_t j = 0; j + 1 < errors.size(); ++j) o.push_back(std::log2(errors[j] / errors[j + 1]));
  return o;
}

double average_order(const std::vector<double>& errors) {
  auto o = pairwise_orders(errors);
  double s = 0.0;
  for (double v : o) s += v;
  return s / double(o.size());
}

}  // namespace rbfadv
