#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rbfadv/simd.hpp"

namespace rbfadv::simd {

namespace {

Backend detect() {
  const char* env = std::getenv("RBF_ADVECT_SIMD");
  if (env && std::string(env) == "scalar") return Backend::Scalar;
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_available() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

double dot(const double* x, const double* y, std::size_t n) {
  return active_backend() == Backend::Avx2 ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  if (active_backend() == Backend::Avx2)
    avx2::axpy(a, x, y, n);
  else
    scalar::axpy(a, x, y, n);
}

void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  if (active_backend() == Backend::Avx2)
    avx2::matvec(a, rows, cols, x, y);
  else
    scalar::matvec(a, rows, cols, x, y);
}

}  // namespace rbfadv::simd
