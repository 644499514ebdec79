#include "bsw/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "bsw/errors.hpp"

namespace bsw {

namespace {

constexpr int kSentinelBand = 3;

}  // namespace

KoszulComplex::KoszulComplex(const CurveModel& model, int d, int max_k)
    : pieces_(model, d, max_k + 1) {
  const int n = num_generators();
  binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 2), 0));
  for (int a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
  }
}

std::uint64_t KoszulComplex::binomial(int n, int k) const {
  if (k < 0 || n < 0 || k > n) return 0;
  return binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t KoszulComplex::exterior_dim(int p) const { return binomial(num_generators(), p); }

std::uint64_t KoszulComplex::term_dim(int p, int k) const {
  return exterior_dim(p) * pieces_.dim(k);
}

SparseMatrix KoszulComplex::differential(int p, int k) const {
  if (k < 0 || k + 1 > pieces_.max_e()) throw InvalidInput("Koszul term outside the stored pieces");
  SparseMatrix out;
  out.n_cols = term_dim(p, k);
  out.n_rows = p >= 1 ? term_dim(p - 1, k + 1) : 0;
  if (p < 1 || out.n_cols == 0) return out;

  const int n = num_generators();
  const auto& field = pieces_.model().field();
  const auto& linear = pieces_.basis(1);
  const auto& source = pieces_.basis(k);
  const std::size_t dim_target = pieces_.dim(k + 1);

  // colex walk over p-subsets of {0..n-1}; subset_rank = sum_t C(s_t, t + 1)
  std::vector<int> subset(static_cast<std::size_t>(p));
  for (int t = 0; t < p; ++t) subset[t] = t;
  std::uint64_t subset_rank = 0;
  std::vector<std::uint64_t> face_rank(static_cast<std::size_t>(p));
  while (true) {
    // rank of the subset with position t removed
    for (int t = 0; t < p; ++t) {
      std::uint64_t rk = 0;
      for (int u = 0, pos = 0; u < p; ++u) {
        if (u == t) continue;
        rk += binomial(subset[u], pos + 1);
        ++pos;
      }
      face_rank[t] = rk;
    }
    for (std::size_t m = 0; m < source.size(); ++m) {
      const auto col = static_cast<std::uint32_t>(subset_rank * source.size() + m);
      for (int t = 0; t < p; ++t) {
        for (const auto& term : multiply(pieces_.model(), linear[subset[t]], source[m])) {
          const int idx = pieces_.index_of(k + 1, term.monomial);
          if (idx < 0) throw InvalidModel("product left the target graded piece");
          const auto row = static_cast<std::uint32_t>(face_rank[t] * dim_target + idx);
          const auto value = t % 2 == 0 ? term.coefficient : field.neg(term.coefficient);
          out.entries.push_back({row, col, value});
        }
      }
    }
    // next subset in colex order
    int t = 0;
    while (t < p && subset[t] + 1 == (t + 1 < p ? subset[t + 1] : n)) ++t;
    if (t == p) break;
    ++subset[t];
    for (int u = 0; u < t; ++u) subset[u] = u;
    ++subset_rank;
  }
  return out;
}

SparseMatrix koszul_differential(const CurveModel& model, int d, int p, int q) {
  if (p < 0 || q < p) throw InvalidInput("Koszul differential needs 0 <= p <= q");
  const KoszulComplex complex(model, d, q - p);
  return complex.differential(p, q - p);
}

bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner,
                      const PrimeField& field) {
  if (outer.n_cols != inner.n_rows) throw InvalidInput("composition of incompatible matrices");
  // outer by column
  std::vector<std::vector<std::pair<std::uint32_t, PrimeField::Element>>> outer_cols(outer.n_cols);
  for (const auto& t : outer.entries) outer_cols[t.col].push_back({t.row, t.value});
  std::vector<std::vector<std::pair<std::uint32_t, PrimeField::Element>>> inner_cols(inner.n_cols);
  for (const auto& t : inner.entries) inner_cols[t.col].push_back({t.row, t.value});

  std::vector<PrimeField::Element> acc(outer.n_rows, 0);
  std::vector<std::uint32_t> touched;
  for (const auto& column : inner_cols) {
    touched.clear();
    for (const auto& [mid, a] : column) {
      for (const auto& [row, b] : outer_cols[mid]) {
        acc[row] = field.add(acc[row], field.mul(a, b));
        touched.push_back(row);
      }
    }
    bool zero = true;
    for (auto row : touched) {
      if (acc[row] != 0) zero = false;
      acc[row] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

namespace {

struct RankTask {
  int p;
  int k;
  std::uint64_t cost;
};

}  // namespace

KoszulResult koszul_resolve(const CurveModel& model, int d, const KoszulOptions& options) {
  const int g = model.genus();
  if (d < 2 * g + 2) {
    throw DegreeTooSmall("Koszul computation needs d >= 2g + 2 = " + std::to_string(2 * g + 2) +
                         ", got " + std::to_string(d));
  }
  const int r = d - g;
  const KoszulComplex complex(model, d, kSentinelBand);
  const int n = complex.num_generators();
  if (n != r + 1) throw InvalidModel("dim R_1 disagrees with d - g + 1");

  // rank of d: Lambda^p (x) R_k -> Lambda^{p-1} (x) R_{k+1} for 1 <= p <= n, 0 <= k <= 3
  std::vector<RankTask> tasks;
  for (int p = 1; p <= n; ++p) {
    for (int k = 0; k <= kSentinelBand; ++k) tasks.push_back({p, k, complex.term_dim(p, k)});
  }
  std::vector<KoszulBlockTiming> timings(tasks.size());
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tasks[a].cost > tasks[b].cost; });

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto& field = model.field();

  auto worker = [&] {
    while (true) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      const std::size_t index = order[slot];
      const auto [p, k, cost] = tasks[index];
      try {
        const auto start = std::chrono::steady_clock::now();
        const SparseMatrix outer = complex.differential(p, k);
        if (k >= 1 && p + 1 <= n) {
          const SparseMatrix inner = complex.differential(p + 1, k - 1);
          if (!composes_to_zero(outer, inner, field)) {
            throw ConsistencyError("Koszul differential does not square to zero at p=" +
                                   std::to_string(p) + " k=" + std::to_string(k));
          }
        }
        const std::size_t rk = rank(outer, field, options.rank);
        const auto stop = std::chrono::steady_clock::now();
        timings[index] = {p, p + k, outer.n_rows, outer.n_cols, rk,
                          std::chrono::duration<double, std::milli>(stop - start).count()};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(order.size());
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  auto rank_of = [&](int p, int k) -> std::uint64_t {
    if (p < 1 || p > n || k < 0 || k > kSentinelBand) return 0;
    return timings[static_cast<std::size_t>((p - 1) * (kSentinelBand + 1) + k)].rank;
  };

  KoszulResult result;
  for (int p = 0; p <= n; ++p) {
    for (int k = 0; k <= kSentinelBand; ++k) {
      const std::uint64_t dim = complex.term_dim(p, k);
      const std::uint64_t out_rank = rank_of(p, k);
      const std::uint64_t in_rank = rank_of(p + 1, k - 1);
      if (out_rank + in_rank > dim) throw ConsistencyError("ranks exceed term dimension");
      const std::uint64_t betti = dim - out_rank - in_rank;
      if (betti == 0) continue;
      const int q = p + k;
      if (k == kSentinelBand || p >= r || (p == 0 && q > 0)) {
        throw ConsistencyError("nonzero Betti number " + std::to_string(betti) + " at (" +
                               std::to_string(p) + "," + std::to_string(q) +
                               "), outside the curve shape");
      }
      result.table.set(p, q, Rational(static_cast<unsigned long>(betti)));
    }
  }
  result.blocks = std::move(timings);
  return result;
}

void write_timing_log(std::ostream& out, const std::vector<KoszulBlockTiming>& blocks) {
  out << "# p q rows cols rank millis\n";
  for (const auto& b : blocks) {
    out << b.p << ' ' << b.q << ' ' << b.rows << ' ' << b.cols << ' ' << b.rank << ' '
        << static_cast<long long>(b.millis + 0.5) << '\n';
  }
}

}  // namespace bsw
