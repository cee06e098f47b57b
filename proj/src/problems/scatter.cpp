#include <random>

#include "rbfadv/errors.hpp"
#include "rbfadv/problems.hpp"

namespace rbfadv {

namespace {

// 53-bit mantissa draw in [0, 1); independent of the standard library's distributions.
double unit(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

}  // namespace

CenterSet scattered_centers(std::size_t n, const ScatterConfig& cfg, double lo, double hi) {
  if (n < 2) throw DimensionError("scattered set needs at least two points");
  if (!(cfg.sigma > 0.0)) throw DomainError("sigma must be positive");
  std::mt19937_64 gen(cfg.seed);
  const double len = hi - lo;
  const double amp = len / (cfg.sigma * double(n - 1));
  const double min_gap = 0.1 * len / double(n);
  std::vector<double> x(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    x.front() = lo;
    x.back() = hi;
    for (std::size_t i = 1; i + 1 < n; ++i)
      x[i] = lo + len * double(i) / double(n - 1) + amp * (2.0 * unit(gen) - 1.0);
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = x[i] - x[i - 1] >= min_gap;
    if (ok) return CenterSet::line(x, lo, hi);
  }
  throw DegenerateCentersError("scattered_centers: no admissible draw within 100 attempts");
}

}  // namespace rbfadv
