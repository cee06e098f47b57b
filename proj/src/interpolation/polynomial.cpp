#include "rbfadv/interpolation.hpp"

namespace rbfadv {

namespace {

template <class T>
T ipow(T z, int p) {
  T v = 1;
  for (int i = 0; i < p; ++i) v *= z;
  return v;
}

}  // namespace

PolynomialSpace::PolynomialSpace(int dim, int m, const Box& domain) : dim_(dim), m_(m), box_(domain) {
  if (dim != 1 && dim != 2) throw DimensionError("polynomial space dimension must be 1 or 2");
  if (m < 0) throw DomainError("polynomial degree bound must be nonnegative");
  for (int deg = 0; deg < m; ++deg) {
    if (dim == 1) {
      exps_.push_back({deg, 0});
    } else {
      for (int i = 0; i <= deg; ++i) exps_.push_back({i, deg - i});
    }
  }
}

namespace {

template <class T>
void poly_values(const std::vector<std::array<int, 2>>& exps, int dim, const Box& box, const Point& x, T* out) {
  T z[2] = {0, 0};
  for (int a = 0; a < dim; ++a) z[a] = (2 * T(x[a]) - (T(box.lo[a]) + T(box.hi[a]))) / (T(box.hi[a]) - T(box.lo[a]));
  for (std::size_t i = 0; i < exps.size(); ++i) out[i] = ipow(z[0], exps[i][0]) * ipow(z[1], exps[i][1]);
}

template <class T>
void poly_derivatives(const std::vector<std::array<int, 2>>& exps, int dim, const Box& box, const Point& x, int axis,
                      T* out) {
  T z[2] = {0, 0};
  for (int a = 0; a < dim; ++a) z[a] = (2 * T(x[a]) - (T(box.lo[a]) + T(box.hi[a]))) / (T(box.hi[a]) - T(box.lo[a]));
  const T scale = 2 / (T(box.hi[axis]) - T(box.lo[axis]));
  const int other = 1 - axis;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const int p = exps[i][axis];
    out[i] = p == 0 ? T(0) : scale * p * ipow(z[axis], p - 1) * ipow(z[other], exps[i][other]);
  }
}

}  // namespace

void PolynomialSpace::values(const Point& x, double* out) const { poly_values(exps_, dim_, box_, x, out); }
void PolynomialSpace::values(const Point& x, long double* out) const { poly_values(exps_, dim_, box_, x, out); }
void PolynomialSpace::derivatives(const Point& x, int axis, double* out) const {
  poly_derivatives(exps_, dim_, box_, x, axis, out);
}
void PolynomialSpace::derivatives(const Point& x, int axis, long double* out) const {
  poly_derivatives(exps_, dim_, box_, x, axis, out);
}

}  // namespace rbfadv
