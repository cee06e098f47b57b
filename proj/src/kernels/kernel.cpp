#include <cctype>
#include <cmath>
#include <sstream>

#include "rbfadv/errors.hpp"
#include "rbfadv/kernels.hpp"

namespace rbfadv {

namespace {

template <class T>
void check_r(T r) {
  if (!(r >= 0)) throw DomainError("kernel evaluated at negative radius");
}

template <class T>
T ipow(T r, int p) {
  T v = 1;
  for (int i = 0; i < p; ++i) v *= r;
  return v;
}

}  // namespace

Kernel Kernel::phs_odd(int k) {
  if (k < 1) throw DomainError("polyharmonic order k must be >= 1");
  return {KernelType::PolyharmonicOdd, k, 1.0};
}

Kernel Kernel::thin_plate(int k) {
  if (k < 1) throw DomainError("polyharmonic order k must be >= 1");
  return {KernelType::PolyharmonicEven, k, 1.0};
}

Kernel Kernel::gaussian(double eps) {
  if (!(eps > 0.0)) throw DomainError("shape parameter must be positive");
  return {KernelType::Gaussian, 1, eps};
}

Kernel Kernel::multiquadric(double eps) {
  if (!(eps > 0.0)) throw DomainError("shape parameter must be positive");
  return {KernelType::Multiquadric, 1, eps};
}

int Kernel::cpd_order() const {
  switch (type) {
    case KernelType::Gaussian: return 0;
    case KernelType::Multiquadric: return 1;
    case KernelType::PolyharmonicOdd: return k;
    case KernelType::PolyharmonicEven: return k + 1;
  }
  return 0;
}

int Kernel::default_degree() const {
  if (type == KernelType::PolyharmonicOdd && k == 3) return 3;
  return cpd_order();
}

std::string Kernel::name() const {
  std::ostringstream os;
  switch (type) {
    case KernelType::PolyharmonicOdd:
      if (k == 2) return "cubic";
      if (k == 3) return "quintic";
      os << "phs" << (2 * k - 1);
      break;
    case KernelType::PolyharmonicEven: os << "tps" << k; break;
    case KernelType::Gaussian: os << "gaussian:epsilon=" << eps; break;
    case KernelType::Multiquadric: os << "multiquadric:epsilon=" << eps; break;
  }
  return os.str();
}

namespace {

template <class T>
T phi_t(const Kernel& kn, T r) {
  check_r(r);
  switch (kn.type) {
    case KernelType::PolyharmonicOdd: return ipow(r, 2 * kn.k - 1);
    case KernelType::PolyharmonicEven: return r == 0.0 ? T(0) : ipow(r, 2 * kn.k) * std::log(r);
    case KernelType::Gaussian: return std::exp(-(T(kn.eps) * r) * (T(kn.eps) * r));
    case KernelType::Multiquadric: return std::sqrt(1 + (T(kn.eps) * r) * (T(kn.eps) * r));
  }
  return 0;
}

template <class T>
T phi_d1_t(const Kernel& kn, T r) {
  check_r(r);
  switch (kn.type) {
    case KernelType::PolyharmonicOdd: {
      const int p = 2 * kn.k - 1;
      return p * ipow(r, p - 1);
    }
    case KernelType::PolyharmonicEven: {
      if (r == 0.0) return 0;
      const int p = 2 * kn.k;
      return ipow(r, p - 1) * (p * std::log(r) + 1.0);
    }
    case KernelType::Gaussian: {
      const T e2 = T(kn.eps) * T(kn.eps);
      return -2.0 * e2 * r * std::exp(-e2 * r * r);
    }
    case KernelType::Multiquadric: {
      const T e2 = T(kn.eps) * T(kn.eps);
      return e2 * r / std::sqrt(1.0 + e2 * r * r);
    }
  }
  return 0;
}

template <class T>
T phi_d2_t(const Kernel& kn, T r) {
  check_r(r);
  switch (kn.type) {
    case KernelType::PolyharmonicOdd: {
      const int p = 2 * kn.k - 1;
      if (p == 1) return 0;
      return p * (p - 1) * ipow(r, p - 2);
    }
    case KernelType::PolyharmonicEven: {
      if (r == 0.0) return 0;
      const int p = 2 * kn.k;
      return ipow(r, p - 2) * (p * (p - 1) * std::log(r) + 2.0 * p - 1.0);
    }
    case KernelType::Gaussian: {
      const T e2 = T(kn.eps) * T(kn.eps);
      return (4.0 * e2 * e2 * r * r - 2.0 * e2) * std::exp(-e2 * r * r);
    }
    case KernelType::Multiquadric: {
      const T e2 = T(kn.eps) * T(kn.eps);
      const T s = std::sqrt(1.0 + e2 * r * r);
      return e2 / (s * s * s);
    }
  }
  return 0;
}

}  // namespace

double phi(const Kernel& kn, double r) { return phi_t(kn, r); }
double phi_d1(const Kernel& kn, double r) { return phi_d1_t(kn, r); }
double phi_d2(const Kernel& kn, double r) { return phi_d2_t(kn, r); }
long double phi(const Kernel& kn, long double r) { return phi_t(kn, r); }
long double phi_d1(const Kernel& kn, long double r) { return phi_d1_t(kn, r); }

Kernel parse_kernel(const std::string& desc) {
  std::string s;
  for (char c : desc) s += (c == ':' || c == ',') ? ' ' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::istringstream is(s);
  std::string base;
  is >> base;
  double eps = 1.0;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || (tok.substr(0, eq) != "epsilon" && tok.substr(0, eq) != "eps"))
      throw ConfigError("unknown kernel option '" + tok + "'");
    try {
      eps = std::stod(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad epsilon in kernel '" + desc + "'");
    }
  }
  if (base == "cubic") return Kernel::cubic();
  if (base == "quintic") return Kernel::quintic();
  if (base == "gaussian") return Kernel::gaussian(eps);
  if (base == "multiquadric" || base == "mq") return Kernel::multiquadric(eps);
  if (base.rfind("tps", 0) == 0 && base.size() > 3) {
    try {
      return Kernel::thin_plate(std::stoi(base.substr(3)));
    } catch (const std::invalid_argument&) {
    }
  }
  if (base.rfind("phs", 0) == 0 && base.size() > 3) {
    int p = 0;
    try {
      p = std::stoi(base.substr(3));
    } catch (const std::invalid_argument&) {
    }
    if (p >= 1 && p % 2 == 1) return Kernel::phs_odd((p + 1) / 2);
  }
  throw ConfigError("unknown kernel '" + desc + "'");
}

}  // namespace rbfadv
