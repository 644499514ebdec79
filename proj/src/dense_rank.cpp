#include <algorithm>
#include <numeric>

#include "bsw/rank.hpp"

namespace bsw {

std::size_t dense_rank(DenseMatrix& matrix, const PrimeField& field,
                       const kernels::ModularKernels& kernels) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  const kernels::ModulusConstants mod(field.characteristic());
  const double p = mod.p;

  std::vector<double*> order(rows);
  for (std::size_t r = 0; r < rows; ++r) order[r] = matrix.row(r);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && order[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(order[rank], order[pivot]);
    double* prow = order[rank];
    const auto lead = static_cast<PrimeField::Element>(prow[c]);
    kernels.scale(prow + c, static_cast<double>(field.inv(lead)), cols - c, mod);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      double* target = order[r];
      if (target[c] != 0) kernels.axpy(target + c, prow + c, p - target[c], cols - c, mod);
    }
    ++rank;
  }
  return rank;
}

}  // namespace bsw
