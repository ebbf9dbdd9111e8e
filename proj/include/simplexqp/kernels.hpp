// SPDX-License-Identifier: Apache-2.0
//
// Dense double-precision inner loops used by the solver: reductions,
// matrix-vector products and axpy updates. Each kernel has a portable
// scalar reference implementation and, on x86-64, an AVX2/FMA variant.
// The variant is picked once at startup from the CPU feature bits and can
// be overridden with SIMPLEXQP_KERNELS=scalar|avx2 or select_backend().

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace simplexqp::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // y = A x with A row-major rows x cols
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2

/// True when the variant was compiled in and the running CPU supports it.
bool backend_available(Backend backend);

/// Table for a specific variant. Throws InvalidArgument when unavailable.
const KernelTable& table(Backend backend);

/// Table currently used by the library.
const KernelTable& active();

/// Switch the library-wide variant. Not synchronized with concurrent solves.
void select_backend(Backend backend);

std::string_view backend_name(Backend backend);

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

inline double squared_norm(std::span<const double> x) { return dot(x, x); }

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace simplexqp::kernels
