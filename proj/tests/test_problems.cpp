#include "doctest.h"
#include "support.hpp"

using namespace rbfadv;
using namespace rbfadv::testing;

namespace {

// Residual of u_t + (a u)_x = 0 (scalar) by central differences.
double pde_residual(const ProblemSpec& p, double t, double x, double y = 0.0) {
  const double h = 1e-5;
  auto u = [&](double tt, double xx) { return p.exact(tt, {xx, y}); };
  const double ut = (u(t + h, x) - u(t - h, x)) / (2 * h);
  if (p.velocity == VelocityKind::Variable) {
    auto f = [&](double xx) { return p.a_fn(xx) * u(t, xx); };
    return ut + (f(x + h) - f(x - h)) / (2 * h);
  }
  const double a = p.dim == 2 ? p.a2d[0] : p.a;
  return ut + a * (u(t, x + h) - u(t, x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("inflow bump") {
  auto p = inflow_bump();
  CHECK(p.initial({0.25, 0.0}) == doctest::Approx(1.0));
  CHECK(p.initial({0.75, 0.0}) == 0.0);
  CHECK(p.inflow(0.25) == doctest::Approx(1.0));
  CHECK(p.exact(0.0, {0.3, 0.0}) == p.initial({0.3, 0.0}));
  CHECK(p.exact(0.4, {0.0, 0.0}) == doctest::Approx(p.inflow(0.4)));
}

TEST_CASE("periodic sine squared") {
  auto p = periodic_sin2();
  CHECK(p.periodic);
  for (double x : {0.1, 0.37, 0.8}) CHECK(p.exact(1.0, {x, 0.0}) == doctest::Approx(p.exact(0.0, {x, 0.0})));
  CHECK(integrate_1d([&](double x) { return std::pow(p.initial({x, 0.0}), 2); }, 0, 1, QuadratureRule::make(10, 8)) ==
        doctest::Approx(0.375));
}

TEST_CASE("variable coefficient problem") {
  auto p = varcoeff_problem();
  CHECK(p.hi() == doctest::Approx(2 * M_PI));
  CHECK(p.exact(0.0, {1.3, 0.0}) == doctest::Approx(p.initial({1.3, 0.0})));
  CHECK(p.exact(0.7, {0.0, 0.0}) == doctest::Approx(std::exp(-0.7) * std::sin(-1.2)));
  CHECK(p.lambda_max == doctest::Approx(2 * M_PI));
}

TEST_CASE("acoustic problem") {
  auto p = acoustic_problem();
  CHECK(p.g0(0.0) == std::array<double, 2>{0.0, 0.0});
  CHECK(p.g0(M_PI / 2)[0] == doctest::Approx(1.0));
  CHECK(p.g1(M_PI / 2)[1] == doctest::Approx(1.0));
  CHECK(p.lambda_max == 1.0);
  CHECK_FALSE(p.has_exact());
  const double s = 1 / std::sqrt(2.0);
  const double w[2][2] = {{s, s}, {s, -s}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(w[0][i] * w[0][j] + w[1][i] * w[1][j] == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("two-dimensional advection") {
  auto p = advection_2d();
  CHECK(p.dim == 2);
  CHECK(p.exact(0.0, {0.4, 0.6}) == p.initial({0.4, 0.6}));
  CHECK(p.exact(0.5, {0.3, 0.9}) == 0.0);
  CHECK(p.exact(0.2631, {0.5, 0.25}) == doctest::Approx(p.initial({0.5 - 0.2631, 0.25})));
}

TEST_CASE("exact solutions satisfy their equations") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char* name : {"inflow_bump", "periodic_sin2", "varcoeff", "advect2d"}) {
    auto p = problem_by_name(name);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double t = 0.05 + 0.9 * u(gen);
      const double x = p.lo() + (p.hi() - p.lo()) * (0.02 + 0.96 * u(gen));
      worst = std::max(worst, std::abs(pde_residual(p, t, x, u(gen))));
    }
    CHECK_MESSAGE(worst <= 1e-4, name << " residual " << worst);
  }
}

TEST_CASE("scattered centers") {
  auto a = scattered_centers(40, {4.0, 7});
  auto b = scattered_centers(40, {4.0, 7});
  CHECK(a.points() == b.points());
  CHECK(a[0][0] == 0.0);
  CHECK(a[39][0] == 1.0);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto c = scattered_centers(20, {4.0, seed});
    for (std::size_t i = 1; i < 20; ++i) CHECK(c[i][0] > c[i - 1][0]);
    CHECK(c.h() > 0.0);
  }
  auto wide = scattered_centers(10, {1e12, 3});
  auto eq = CenterSet::equidistant(10, 0, 1);
  for (std::size_t i = 0; i < 10; ++i) CHECK(wide[i][0] == doctest::Approx(eq[i][0]).epsilon(1e-10));
  CHECK(scattered_centers(40, {4.0, 8}).points() != a.points());
  CHECK_THROWS_AS(scattered_centers(10, {0.0, 1}), DomainError);
}

TEST_CASE("unknown problems are rejected") { CHECK_THROWS_AS(problem_by_name("burgers"), ConfigError); }
