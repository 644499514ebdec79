#pragma once

#include <cstddef>
#include <vector>

#include "bsw/curve_model.hpp"
#include "bsw/kernels/modular_kernels.hpp"
#include "bsw/prime_field.hpp"

namespace bsw {

/// Row-major dense matrix of residues stored as doubles.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Rank by row echelon reduction; destroys the contents of `matrix`.
std::size_t dense_rank(DenseMatrix& matrix, const PrimeField& field,
                       const kernels::ModularKernels& kernels = kernels::active());

struct RankOptions {
  // Hand the active submatrix to the dense kernels once its fill ratio
  // reaches this value, provided it has at most max_dense_cells cells.
  double dense_switch_density = 0.08;
  std::size_t max_dense_cells = std::size_t{1} << 25;
};

struct RankStats {
  std::size_t components = 0;
  std::size_t sparse_pivots = 0;
  std::size_t dense_rows = 0;  // largest dense tail handed to the kernels
  std::size_t dense_cols = 0;
};

/// Exact rank over GF(p). The matrix is split into connected components of
/// its row/column incidence graph; each component is reduced by sparse
/// right-looking elimination with Markowitz-style pivots (fewest-entry
/// column, then shortest row), finishing densely when fill makes that
/// cheaper. Duplicate (row, col) triplets are summed. Deterministic.
std::size_t rank(const SparseMatrix& matrix, const PrimeField& field,
                 const RankOptions& options = {}, RankStats* stats = nullptr);

}  // namespace bsw
