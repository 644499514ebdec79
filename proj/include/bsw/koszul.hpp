#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bsw/betti_table.hpp"
#include "bsw/curve_model.hpp"
#include "bsw/rank.hpp"

namespace bsw {

/// Bases of the Koszul terms Lambda^p V (x) R_k, V = R_1. Subsets of the R_1
/// basis are ranked in colex order; the term basis index is
/// subset_rank * dim R_k + monomial index.
class KoszulComplex {
 public:
  /// Holds R_0..R_{max_k + 1}.
  KoszulComplex(const CurveModel& model, int d, int max_k);

  const GradedPieces& pieces() const { return pieces_; }
  int num_generators() const { return static_cast<int>(pieces_.dim(1)); }
  std::uint64_t exterior_dim(int p) const;
  /// dim Lambda^p V (x) R_k.
  std::uint64_t term_dim(int p, int k) const;

  /// Matrix of d: Lambda^p V (x) R_k -> Lambda^{p-1} V (x) R_{k+1},
  /// v_{s_1} ^ ... ^ v_{s_p} (x) m -> sum_t (-1)^t (... omit s_t ...) (x) v_{s_t} m.
  SparseMatrix differential(int p, int k) const;

 private:
  std::uint64_t binomial(int n, int k) const;

  GradedPieces pieces_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Differential whose domain is Lambda^p V (x) R_{q-p}.
SparseMatrix koszul_differential(const CurveModel& model, int d, int p, int q);

/// True when outer * inner is the zero matrix over the field.
bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner,
                      const PrimeField& field);

struct KoszulBlockTiming {
  int p = 0;
  int q = 0;  // internal degree of the domain
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  double millis = 0;
};

struct KoszulOptions {
  unsigned jobs = 1;
  RankOptions rank;
};

struct KoszulResult {
  BettiTable table;
  std::vector<KoszulBlockTiming> blocks;  // ordered by (p, q)
};

/// Graded Betti numbers beta_{p,q} = dim Tor_p(R, k)_q of the coordinate ring
/// for 0 <= p <= r + 1 and 0 <= q - p <= 3, as Koszul homology dimensions.
/// Every differential is checked to square to zero; the q - p = 3 band,
/// positions p >= r and row 0 beyond (0,0) must vanish. Self-check failures
/// raise ConsistencyError. Requires d >= 2g + 2 (DegreeTooSmall).
KoszulResult koszul_resolve(const CurveModel& model, int d, const KoszulOptions& options = {});

inline BettiTable koszul_betti(const CurveModel& model, int d, const KoszulOptions& options = {}) {
  return koszul_resolve(model, d, options).table;
}

/// `p q rows cols rank millis` per block.
void write_timing_log(std::ostream& out, const std::vector<KoszulBlockTiming>& blocks);

}  // namespace bsw
