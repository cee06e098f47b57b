#pragma once

#include <cstddef>
#include <string_view>

// Dense BLAS-1/2 kernels with a scalar reference and an AVX2+FMA variant.
// The active backend is chosen once from cpuid; RBF_ADVECT_SIMD=scalar forces the reference.
namespace rbfadv::simd {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
void set_backend(Backend b);  // throws if the CPU lacks the requested backend
bool avx2_available();
std::string_view backend_name(Backend b);

double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
// y = A x with A row-major rows x cols.
void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
}  // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
}  // namespace avx2

}  // namespace rbfadv::simd
