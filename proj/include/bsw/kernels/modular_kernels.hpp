#pragma once

#include <cstddef>
#include <string_view>

// Row kernels for dense elimination over GF(p). Residues are held in doubles:
// for p < 2^26 every intermediate s*x + y is an exact integer below 2^53, so
// each ISA variant produces bit-identical output.

namespace bsw::kernels {

enum class Isa { scalar, avx2, neon };

struct ModulusConstants {
  double p = 0;
  double p_inv = 0;
  explicit ModulusConstants(unsigned prime) : p(prime), p_inv(1.0 / prime) {}
};

// dst[k] = (dst[k] + scalar * src[k]) mod p, all operands in [0, p).
using AxpyFn = void (*)(double* dst, const double* src, double scalar, std::size_t n,
                        const ModulusConstants& mod);
// dst[k] = (scalar * dst[k]) mod p.
using ScaleFn = void (*)(double* dst, double scalar, std::size_t n, const ModulusConstants& mod);

struct ModularKernels {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

std::string_view name(Isa isa);
bool available(Isa isa);

/// Kernels for a specific ISA; throws std::invalid_argument if not available.
const ModularKernels& for_isa(Isa isa);

/// Best available ISA, unless BSW_SIMD=scalar|avx2|neon selects another one
/// or set_active() was called.
const ModularKernels& active();
void set_active(Isa isa);

namespace detail {
void axpy_scalar(double* dst, const double* src, double scalar, std::size_t n,
                 const ModulusConstants& mod);
void scale_scalar(double* dst, double scalar, std::size_t n, const ModulusConstants& mod);
#if defined(BSW_BUILD_AVX2)
void axpy_avx2(double* dst, const double* src, double scalar, std::size_t n,
               const ModulusConstants& mod);
void scale_avx2(double* dst, double scalar, std::size_t n, const ModulusConstants& mod);
#endif
#if defined(BSW_BUILD_NEON)
void axpy_neon(double* dst, const double* src, double scalar, std::size_t n,
               const ModulusConstants& mod);
void scale_neon(double* dst, double scalar, std::size_t n, const ModulusConstants& mod);
#endif
}  // namespace detail

}  // namespace bsw::kernels
