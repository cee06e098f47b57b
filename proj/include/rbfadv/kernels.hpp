#pragma once

#include <string>

namespace rbfadv {

enum class KernelType { PolyharmonicOdd, PolyharmonicEven, Gaussian, Multiquadric };

// phi(r) = r^(2k-1), r^(2k) log r, exp(-(eps r)^2) or sqrt(1 + (eps r)^2).
struct Kernel {
  KernelType type = KernelType::PolyharmonicOdd;
  int k = 2;
  double eps = 1.0;

  static Kernel cubic() { return {KernelType::PolyharmonicOdd, 2, 1.0}; }
  static Kernel quintic() { return {KernelType::PolyharmonicOdd, 3, 1.0}; }
  static Kernel phs_odd(int k);
  static Kernel thin_plate(int k);
  static Kernel gaussian(double eps);
  static Kernel multiquadric(double eps);

  int cpd_order() const;
  // Polynomial degree bound used when none is given: cubic 2, quintic 3, otherwise cpd_order.
  int default_degree() const;
  std::string name() const;
};

double phi(const Kernel& kernel, double r);
double phi_d1(const Kernel& kernel, double r);
double phi_d2(const Kernel& kernel, double r);
// Extended-precision evaluation used when assembling cardinal functions.
long double phi(const Kernel& kernel, long double r);
long double phi_d1(const Kernel& kernel, long double r);

// "cubic", "quintic", "tps<k>", "gaussian", "multiquadric", optionally followed by
// "epsilon=<float>" separated by ':', ',' or whitespace.
Kernel parse_kernel(const std::string& desc);

}  // namespace rbfadv
