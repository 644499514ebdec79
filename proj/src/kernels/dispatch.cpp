#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bsw/kernels/modular_kernels.hpp"

namespace bsw::kernels {

namespace {

constexpr ModularKernels kScalar{Isa::scalar, detail::axpy_scalar, detail::scale_scalar};
#if defined(BSW_BUILD_AVX2)
constexpr ModularKernels kAvx2{Isa::avx2, detail::axpy_avx2, detail::scale_avx2};
#endif
#if defined(BSW_BUILD_NEON)
constexpr ModularKernels kNeon{Isa::neon, detail::axpy_neon, detail::scale_neon};
#endif

Isa best_available() {
  if (available(Isa::avx2)) return Isa::avx2;
  if (available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa initial_isa() {
  if (const char* env = std::getenv("BSW_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == name(isa) && available(isa)) return isa;
    }
  }
  return best_available();
}

std::atomic<const ModularKernels*>& active_slot() {
  static std::atomic<const ModularKernels*> slot{&for_isa(initial_isa())};
  return slot;
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(BSW_BUILD_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(BSW_BUILD_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const ModularKernels& for_isa(Isa isa) {
  if (!available(isa)) {
    throw std::invalid_argument("kernel ISA not available: " + std::string(name(isa)));
  }
  switch (isa) {
#if defined(BSW_BUILD_AVX2)
    case Isa::avx2: return kAvx2;
#endif
#if defined(BSW_BUILD_NEON)
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const ModularKernels& active() { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&for_isa(isa), std::memory_order_release); }

}  // namespace bsw::kernels
