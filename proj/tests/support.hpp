#pragma once

#include <memory>
#include <random>

#include "rbfadv/experiment.hpp"

namespace rbfadv::testing {

inline std::shared_ptr<const NodalBasis> line_basis(std::size_t n, const Kernel& k, int m = -1, double lo = 0.0,
                                                     double hi = 1.0) {
  return std::make_shared<const NodalBasis>(CenterSet::equidistant(n, lo, hi), k, m < 0 ? k.default_degree() : m);
}

inline Vector random_vector(std::size_t n, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  Vector v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

inline Vector sample(const NodalBasis& nb, double (*f)(double)) {
  Vector v(nb.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(nb.centers()[i][0]);
  return v;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace rbfadv::testing
