// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <string>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"

namespace simplexqp::kernels {

namespace {

constexpr KernelTable kScalarTable{Backend::scalar, &scalar::dot, &scalar::sum, &scalar::gemv,
                                   &scalar::axpy};

#ifdef SIMPLEXQP_HAVE_AVX2
constexpr KernelTable kAvx2Table{Backend::avx2, &avx2::dot, &avx2::sum, &avx2::gemv, &avx2::axpy};
#endif

bool cpu_has_avx2() {
#if defined(SIMPLEXQP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("SIMPLEXQP_KERNELS")) {
    const std::string wanted(env);
    if (wanted == "scalar") return &kScalarTable;
    if (wanted == "avx2" && backend_available(Backend::avx2)) return &table(Backend::avx2);
  }
  if (backend_available(Backend::avx2)) return &table(Backend::avx2);
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{initial_table()};
  return ptr;
}

}  // namespace

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2: {
      static const bool ok = cpu_has_avx2();
      return ok;
    }
  }
  return false;
}

const KernelTable& table(Backend backend) {
  if (!backend_available(backend)) {
    throw InvalidArgument("kernel backend '" + std::string(backend_name(backend)) +
                          "' is not available on this machine");
  }
#ifdef SIMPLEXQP_HAVE_AVX2
  if (backend == Backend::avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select_backend(Backend backend) { current().store(&table(backend), std::memory_order_relaxed); }

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace simplexqp::kernels
