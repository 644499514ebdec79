#include <arm_neon.h>

#include <cmath>

#include "bsw/kernels/modular_kernels.hpp"

namespace bsw::kernels::detail {

namespace {

inline float64x2_t reduce2(float64x2_t t, float64x2_t p, float64x2_t p_inv) {
  const float64x2_t q = vrndmq_f64(vmulq_f64(t, p_inv));
  float64x2_t r = vfmsq_f64(t, q, p);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const uint64x2_t below = vcltq_f64(r, zero);
  r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(below, vreinterpretq_u64_f64(p))));
  const uint64x2_t above = vcgeq_f64(r, p);
  r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(above, vreinterpretq_u64_f64(p))));
  return r;
}

inline double reduce1(double t, const ModulusConstants& mod) {
  double r = t - std::floor(t * mod.p_inv) * mod.p;
  if (r < 0) r += mod.p;
  if (r >= mod.p) r -= mod.p;
  return r;
}

}  // namespace

void axpy_neon(double* dst, const double* src, double scalar, std::size_t n,
               const ModulusConstants& mod) {
  const float64x2_t s = vdupq_n_f64(scalar);
  const float64x2_t p = vdupq_n_f64(mod.p);
  const float64x2_t p_inv = vdupq_n_f64(mod.p_inv);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t a = vfmaq_f64(vld1q_f64(dst + k), s, vld1q_f64(src + k));
    vst1q_f64(dst + k, reduce2(a, p, p_inv));
  }
  for (; k < n; ++k) dst[k] = reduce1(scalar * src[k] + dst[k], mod);
}

void scale_neon(double* dst, double scalar, std::size_t n, const ModulusConstants& mod) {
  const float64x2_t s = vdupq_n_f64(scalar);
  const float64x2_t p = vdupq_n_f64(mod.p);
  const float64x2_t p_inv = vdupq_n_f64(mod.p_inv);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    vst1q_f64(dst + k, reduce2(vmulq_f64(s, vld1q_f64(dst + k)), p, p_inv));
  }
  for (; k < n; ++k) dst[k] = reduce1(scalar * dst[k], mod);
}

}  // namespace bsw::kernels::detail
