#include <immintrin.h>

#include <cmath>

#include "bsw/kernels/modular_kernels.hpp"

namespace bsw::kernels::detail {

namespace {

inline __m256d reduce4(__m256d t, __m256d p, __m256d p_inv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, p_inv));
  __m256d r = _mm256_fnmadd_pd(q, p, t);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

inline double reduce1(double t, const ModulusConstants& mod) {
  double r = t - std::floor(t * mod.p_inv) * mod.p;
  if (r < 0) r += mod.p;
  if (r >= mod.p) r -= mod.p;
  return r;
}

}  // namespace

void axpy_avx2(double* dst, const double* src, double scalar, std::size_t n,
               const ModulusConstants& mod) {
  const __m256d s = _mm256_set1_pd(scalar);
  const __m256d p = _mm256_set1_pd(mod.p);
  const __m256d p_inv = _mm256_set1_pd(mod.p_inv);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256d a0 = _mm256_fmadd_pd(s, _mm256_loadu_pd(src + k), _mm256_loadu_pd(dst + k));
    const __m256d a1 =
        _mm256_fmadd_pd(s, _mm256_loadu_pd(src + k + 4), _mm256_loadu_pd(dst + k + 4));
    _mm256_storeu_pd(dst + k, reduce4(a0, p, p_inv));
    _mm256_storeu_pd(dst + k + 4, reduce4(a1, p, p_inv));
  }
  for (; k + 4 <= n; k += 4) {
    const __m256d a = _mm256_fmadd_pd(s, _mm256_loadu_pd(src + k), _mm256_loadu_pd(dst + k));
    _mm256_storeu_pd(dst + k, reduce4(a, p, p_inv));
  }
  for (; k < n; ++k) dst[k] = reduce1(scalar * src[k] + dst[k], mod);
}

void scale_avx2(double* dst, double scalar, std::size_t n, const ModulusConstants& mod) {
  const __m256d s = _mm256_set1_pd(scalar);
  const __m256d p = _mm256_set1_pd(mod.p);
  const __m256d p_inv = _mm256_set1_pd(mod.p_inv);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(dst + k, reduce4(_mm256_mul_pd(s, _mm256_loadu_pd(dst + k)), p, p_inv));
  }
  for (; k < n; ++k) dst[k] = reduce1(scalar * dst[k], mod);
}

}  // namespace bsw::kernels::detail
