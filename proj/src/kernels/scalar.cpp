#include <cmath>

#include "bsw/kernels/modular_kernels.hpp"

namespace bsw::kernels::detail {

namespace {

inline double reduce(double t, const ModulusConstants& mod) {
  // the quotient estimate is off by at most one in either direction
  double r = t - std::floor(t * mod.p_inv) * mod.p;
  if (r < 0) r += mod.p;
  if (r >= mod.p) r -= mod.p;
  return r;
}

}  // namespace

void axpy_scalar(double* dst, const double* src, double scalar, std::size_t n,
                 const ModulusConstants& mod) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = reduce(scalar * src[k] + dst[k], mod);
}

void scale_scalar(double* dst, double scalar, std::size_t n, const ModulusConstants& mod) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = reduce(scalar * dst[k], mod);
}

}  // namespace bsw::kernels::detail
