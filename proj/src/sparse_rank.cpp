#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "bsw/errors.hpp"
#include "bsw/rank.hpp"

namespace bsw {

namespace {

using Element = PrimeField::Element;

struct Entry {
  std::uint32_t col;
  Element value;
};

using Row = std::vector<Entry>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// One connected block of the matrix with columns renumbered 0..n_cols-1.
struct Component {
  std::vector<Row> rows;
  std::size_t n_cols = 0;
};

std::vector<Component> split_components(const SparseMatrix& matrix, const PrimeField& field) {
  for (const auto& t : matrix.entries) {
    if (t.row >= matrix.n_rows || t.col >= matrix.n_cols) {
      throw InvalidInput("sparse matrix entry out of range");
    }
  }
  std::vector<Triplet> sorted = matrix.entries;
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  std::vector<Row> rows(matrix.n_rows);
  for (std::size_t k = 0; k < sorted.size();) {
    const auto r = sorted[k].row, c = sorted[k].col;
    Element v = 0;
    for (; k < sorted.size() && sorted[k].row == r && sorted[k].col == c; ++k) {
      v = field.add(v, field.reduce(sorted[k].value));
    }
    if (v != 0) rows[r].push_back({c, v});
  }

  // rows occupy ids [0, n_rows), columns [n_rows, n_rows + n_cols)
  DisjointSets sets(matrix.n_rows + matrix.n_cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) sets.unite(r, matrix.n_rows + e.col);
  }

  std::vector<std::int64_t> component_of_root(matrix.n_rows + matrix.n_cols, -1);
  std::vector<Component> components;
  std::vector<std::int64_t> local_col(matrix.n_cols, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    const std::size_t root = sets.find(r);
    if (component_of_root[root] < 0) {
      component_of_root[root] = static_cast<std::int64_t>(components.size());
      components.emplace_back();
    }
    Component& comp = components[static_cast<std::size_t>(component_of_root[root])];
    Row local;
    local.reserve(rows[r].size());
    for (const auto& e : rows[r]) {
      auto& lc = local_col[e.col];
      if (lc < 0) lc = static_cast<std::int64_t>(comp.n_cols++);
      local.push_back({static_cast<std::uint32_t>(lc), e.value});
    }
    std::sort(local.begin(), local.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    comp.rows.push_back(std::move(local));
  }
  return components;
}

const Entry* find_col(const Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::uint32_t c) { return e.col < c; });
  return it != row.end() && it->col == col ? &*it : nullptr;
}

class SparseEliminator {
 public:
  SparseEliminator(Component comp, const PrimeField& field, const RankOptions& options,
                   RankStats* stats)
      : rows_(std::move(comp.rows)),
        n_cols_(comp.n_cols),
        field_(field),
        options_(options),
        stats_(stats),
        row_alive_(rows_.size(), true),
        col_rows_(n_cols_),
        col_count_(n_cols_, 0),
        col_alive_(n_cols_, true) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      nnz_ += rows_[r].size();
      for (const auto& e : rows_[r]) {
        col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[e.col];
      }
    }
    alive_rows_ = rows_.size();
    for (std::uint32_t c = 0; c < n_cols_; ++c) {
      if (col_count_[c] > 0) {
        ++alive_cols_;
        heap_.push({col_count_[c], c});
      }
    }
  }

  std::size_t run() {
    std::size_t rank = 0;
    while (!heap_.empty()) {
      const auto [count, col] = heap_.top();
      heap_.pop();
      if (!col_alive_[col] || count != col_count_[col]) continue;
      if (count == 0) {
        col_alive_[col] = false;
        --alive_cols_;
        continue;
      }
      if (should_go_dense()) return rank + finish_dense();
      eliminate(col);
      ++rank;
      if (stats_) ++stats_->sparse_pivots;
    }
    return rank;
  }

 private:
  using HeapItem = std::pair<std::uint32_t, std::uint32_t>;  // (count, col)

  bool should_go_dense() const {
    const double cells = static_cast<double>(alive_rows_) * static_cast<double>(alive_cols_);
    if (cells < 64 || cells > static_cast<double>(options_.max_dense_cells)) return false;
    return static_cast<double>(nnz_) >= options_.dense_switch_density * cells;
  }

  void eliminate(std::uint32_t col) {
    // pivot: shortest live row in this column, lowest id on ties
    auto& list = col_rows_[col];
    std::vector<std::uint32_t> holders;
    holders.reserve(list.size());
    for (auto r : list) {
      if (row_alive_[r] && find_col(rows_[r], col)) holders.push_back(r);
    }
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    list.clear();

    std::uint32_t pivot = holders.front();
    for (auto r : holders) {
      if (rows_[r].size() < rows_[pivot].size()) pivot = r;
    }
    const Row& prow = rows_[pivot];
    const Element pivot_inv = field_.inv(find_col(prow, col)->value);

    touched_.clear();
    for (auto r : holders) {
      if (r == pivot) continue;
      const Element factor = field_.mul(find_col(rows_[r], col)->value, pivot_inv);
      subtract_multiple(r, prow, field_.neg(factor));
    }

    for (const auto& e : prow) {
      --col_count_[e.col];
      touched_.push_back(e.col);
    }
    nnz_ -= prow.size();
    rows_[pivot].clear();
    rows_[pivot].shrink_to_fit();
    row_alive_[pivot] = false;
    --alive_rows_;
    col_alive_[col] = false;
    --alive_cols_;

    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    for (auto c : touched_) {
      if (!col_alive_[c]) continue;
      if (col_count_[c] == 0) {
        col_alive_[c] = false;
        --alive_cols_;
      } else {
        heap_.push({col_count_[c], c});
      }
    }
  }

  // rows_[target] += factor * source, maintaining column bookkeeping.
  void subtract_multiple(std::uint32_t target, const Row& source, Element factor) {
    const Row& old = rows_[target];
    Row merged;
    merged.reserve(old.size() + source.size());
    std::size_t a = 0, b = 0;
    while (a < old.size() || b < source.size()) {
      if (b == source.size() || (a < old.size() && old[a].col < source[b].col)) {
        merged.push_back(old[a++]);
      } else if (a == old.size() || source[b].col < old[a].col) {
        const std::uint32_t c = source[b].col;
        merged.push_back({c, field_.mul(factor, source[b].value)});
        ++col_count_[c];
        col_rows_[c].push_back(target);
        touched_.push_back(c);
        ++b;
      } else {
        const std::uint32_t c = old[a].col;
        const Element v = field_.add(old[a].value, field_.mul(factor, source[b].value));
        if (v != 0) {
          merged.push_back({c, v});
        } else {
          --col_count_[c];
          touched_.push_back(c);
        }
        ++a;
        ++b;
      }
    }
    nnz_ -= old.size();
    nnz_ += merged.size();
    rows_[target] = std::move(merged);
  }

  std::size_t finish_dense() {
    std::vector<std::int64_t> dense_col(n_cols_, -1);
    std::size_t n_dense_cols = 0;
    for (std::uint32_t c = 0; c < n_cols_; ++c) {
      if (col_alive_[c] && col_count_[c] > 0) dense_col[c] = static_cast<std::int64_t>(n_dense_cols++);
    }
    std::vector<std::uint32_t> live;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r] && !rows_[r].empty()) live.push_back(r);
    }
    DenseMatrix dense(live.size(), n_dense_cols);
    for (std::size_t k = 0; k < live.size(); ++k) {
      for (const auto& e : rows_[live[k]]) {
        dense(k, static_cast<std::size_t>(dense_col[e.col])) = static_cast<double>(e.value);
      }
    }
    if (stats_) {
      stats_->dense_rows = std::max(stats_->dense_rows, dense.rows());
      stats_->dense_cols = std::max(stats_->dense_cols, dense.cols());
    }
    return dense_rank(dense, field_);
  }

  std::vector<Row> rows_;
  std::uint32_t n_cols_;
  const PrimeField& field_;
  const RankOptions& options_;
  RankStats* stats_;

  std::vector<bool> row_alive_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<bool> col_alive_;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap_;
  std::vector<std::uint32_t> touched_;
  std::size_t nnz_ = 0;
  std::size_t alive_rows_ = 0;
  std::size_t alive_cols_ = 0;
};

}  // namespace

std::size_t rank(const SparseMatrix& matrix, const PrimeField& field, const RankOptions& options,
                 RankStats* stats) {
  auto components = split_components(matrix, field);
  if (stats) stats->components += components.size();
  std::size_t total = 0;
  for (auto& comp : components) {
    SparseEliminator elim(std::move(comp), field, options, stats);
    total += elim.run();
  }
  return total;
}

}  // namespace bsw
