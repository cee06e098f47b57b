#include <algorithm>
#include <cmath>
#include <limits>

#include "rbfadv/interpolation.hpp"

namespace rbfadv {

CenterSet::CenterSet(int dim, std::vector<Point> pts, const Box& box) : dim_(dim), pts_(std::move(pts)), box_(box) {
  if (pts_.empty()) throw DimensionError("center set must not be empty");
  double h = std::numeric_limits<double>::infinity();
  if (dim_ == 1) {
    for (std::size_t i = 1; i < pts_.size(); ++i) h = std::min(h, pts_[i][0] - pts_[i - 1][0]);
  } else {
    for (std::size_t i = 0; i < pts_.size(); ++i)
      for (std::size_t j = i + 1; j < pts_.size(); ++j)
        h = std::min(h, std::hypot(pts_[i][0] - pts_[j][0], pts_[i][1] - pts_[j][1]));
  }
  if (pts_.size() > 1 && !(h > 0.0)) throw DegenerateCentersError("centers are not pairwise distinct");
  h_ = pts_.size() > 1 ? h : 0.0;
}

CenterSet CenterSet::line(std::vector<double> x, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("interval must satisfy lo < hi");
  std::sort(x.begin(), x.end());
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (double v : x) pts.push_back({v, 0.0});
  Box box{{lo, 0.0}, {hi, 0.0}};
  return CenterSet(1, std::move(pts), box);
}

CenterSet CenterSet::equidistant(std::size_t n, double lo, double hi) {
  if (n < 2) throw DimensionError("equidistant set needs at least two points");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + (hi - lo) * double(i) / double(n - 1);
  x.back() = hi;
  return line(std::move(x), lo, hi);
}

CenterSet CenterSet::grid2d(std::size_t n, const Box& box) {
  if (n < 2) throw DimensionError("grid needs at least two points per side");
  std::vector<Point> pts;
  pts.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pts.push_back({box.lo[0] + (box.hi[0] - box.lo[0]) * double(i) / double(n - 1),
                     box.lo[1] + (box.hi[1] - box.lo[1]) * double(j) / double(n - 1)});
  return CenterSet(2, std::move(pts), box);
}

CenterSet CenterSet::scattered2d(std::vector<Point> pts, const Box& box) { return CenterSet(2, std::move(pts), box); }

std::vector<double> CenterSet::coordinates(int axis) const {
  std::vector<double> c;
  c.reserve(pts_.size());
  for (const auto& p : pts_) c.push_back(p[axis]);
  return c;
}

}  // namespace rbfadv
