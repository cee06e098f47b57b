#include "doctest.h"
#include "support.hpp"

using namespace rbfadv;

TEST_CASE("kernel values") {
  CHECK(phi(Kernel::cubic(), 2.0) == doctest::Approx(8.0));
  CHECK(phi(Kernel::gaussian(1.0), 0.0) == doctest::Approx(1.0));
  CHECK(phi(Kernel::quintic(), 2.0) == doctest::Approx(32.0));
  CHECK(phi(Kernel::multiquadric(1.0), 0.0) == doctest::Approx(1.0));
  CHECK(phi(Kernel::thin_plate(1), 0.0) == 0.0);
  CHECK(phi(Kernel::thin_plate(1), std::exp(1.0)) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("kernel derivatives") {
  CHECK(phi_d1(Kernel::cubic(), 2.0) == doctest::Approx(12.0));
  CHECK(phi_d2(Kernel::cubic(), 2.0) == doctest::Approx(12.0));
  CHECK(phi_d1(Kernel::quintic(), 1.0) == doctest::Approx(5.0));
  CHECK(phi_d1(Kernel::cubic(), 0.0) == 0.0);
  CHECK(phi_d2(Kernel::cubic(), 0.0) == 0.0);
  CHECK(phi_d2(Kernel::gaussian(2.0), 0.0) == doctest::Approx(-8.0));
}

TEST_CASE("negative radius is rejected") {
  CHECK_THROWS_AS(phi(Kernel::cubic(), -1.0), DomainError);
  CHECK_THROWS_AS(phi_d1(Kernel::quintic(), -0.5), DomainError);
  CHECK_THROWS_AS(Kernel::gaussian(0.0), DomainError);
  CHECK_THROWS_AS(Kernel::phs_odd(0), DomainError);
}

TEST_CASE("analytic derivatives agree with central differences") {
  const std::vector<Kernel> kernels{Kernel::cubic(),          Kernel::quintic(),         Kernel::phs_odd(4),
                                    Kernel::thin_plate(1),    Kernel::thin_plate(2),     Kernel::gaussian(0.7),
                                    Kernel::multiquadric(1.3)};
  const double h = 1e-6;
  for (const auto& k : kernels) {
    for (int i = 0; i <= 60; ++i) {
      const double r = 0.1 + (10.0 - 0.1) * i / 60.0;
      const double d1 = phi_d1(k, r);
      const double d2 = phi_d2(k, r);
      const double fd1 = (phi(k, r + h) - phi(k, r - h)) / (2 * h);
      const double fd2 = (phi_d1(k, r + h) - phi_d1(k, r - h)) / (2 * h);
      CHECK(std::abs(d1 - fd1) <= 1e-5 * std::max(1.0, std::abs(d1)));
      CHECK(std::abs(d2 - fd2) <= 1e-5 * std::max(1.0, std::abs(d2)));
    }
  }
}

TEST_CASE("conditional positive definiteness orders and degrees") {
  CHECK(Kernel::cubic().cpd_order() == 2);
  CHECK(Kernel::quintic().cpd_order() == 3);
  CHECK(Kernel::cubic().default_degree() == 2);
  CHECK(Kernel::quintic().default_degree() == 3);
  CHECK(Kernel::gaussian(1.0).cpd_order() == 0);
  CHECK(Kernel::multiquadric(1.0).cpd_order() == 1);
}

TEST_CASE("kernel specs parse") {
  CHECK(parse_kernel("cubic").name() == "cubic");
  CHECK(parse_kernel("quintic").k == 3);
  CHECK(parse_kernel("gaussian:epsilon=2").eps == doctest::Approx(2.0));
  CHECK(parse_kernel("gaussian:epsilon=2").type == KernelType::Gaussian);
  CHECK(parse_kernel("tps2").type == KernelType::PolyharmonicEven);
  CHECK_THROWS_AS(parse_kernel("wendland"), ConfigError);
  CHECK_THROWS_AS(parse_kernel("gaussian:epsilon=abc"), ConfigError);
}
