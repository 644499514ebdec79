#include <random>
#include <sstream>

#include "bsw/curve_asymptotics.hpp"
#include "bsw/errors.hpp"
#include "bsw/koszul.hpp"
#include "bsw/rank.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsw;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

CurveModel elliptic(std::uint32_t p = kDefaultCharacteristic) {
  return CurveModel::hyperelliptic(1, {0, -1, 0, 1}, p);
}
CurveModel genus_two() { return CurveModel::hyperelliptic(2, {-1, 0, 0, 0, 0, 1}); }

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                           double density, std::uint32_t p) {
  SparseMatrix m{rows, cols, {}};
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<std::uint32_t> value(1, p - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) {
        m.entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), value(rng)});
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  const PrimeField F(kDefaultCharacteristic);
  SparseMatrix identity{50, 50, {}};
  for (std::uint32_t k = 0; k < 50; ++k) identity.entries.push_back({k, k, 1});
  CHECK(rank(identity, F) == 50);
  CHECK(rank(SparseMatrix{7, 9, {}}, F) == 0);
  CHECK(rank(multiplication_matrix(genus_two(), 7, 1), F) == 13);
}

TEST_CASE("rank agrees with dense elimination on random sparse matrices") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> dim(1, 60);
  std::uniform_real_distribution<double> density(0.01, 0.3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t p = trial % 2 ? 65537 : 32003;
    const PrimeField F(p);
    SparseMatrix m = random_sparse(rng, dim(rng), dim(rng), density(rng), p);
    // duplicate a few positions so the summation path runs; some cancel to zero
    if (!m.entries.empty()) {
      const Triplet t = m.entries[trial % m.entries.size()];
      m.entries.push_back({t.row, t.col, p - t.value});
      m.entries.push_back({t.row, t.col, 3});
    }
    const std::size_t expected = oracle::rank_mod_p(m, p);
    RankStats stats;
    CHECK(rank(m, F, {}, &stats) == expected);
    if (expected > 0) CHECK(stats.components >= 1);

    RankOptions eager;
    eager.dense_switch_density = 0.0;
    RankStats dense_stats;
    CHECK(rank(m, F, eager, &dense_stats) == expected);

    RankOptions never;
    never.max_dense_cells = 0;
    CHECK(rank(m, F, never) == expected);
  }
}

TEST_CASE("rank on block-structured input splits components") {
  std::mt19937_64 rng(7);
  const PrimeField F(32003);
  SparseMatrix m{0, 0, {}};
  for (int block = 0; block < 5; ++block) {
    const SparseMatrix b = random_sparse(rng, 12, 10, 0.4, 32003);
    for (auto t : b.entries) {
      m.entries.push_back({static_cast<std::uint32_t>(t.row + m.n_rows),
                           static_cast<std::uint32_t>(t.col + m.n_cols), t.value});
    }
    m.n_rows += 12;
    m.n_cols += 10;
  }
  RankStats stats;
  CHECK(rank(m, F, {}, &stats) == oracle::rank_mod_p(m, 32003));
  CHECK(stats.components >= 5);
}

TEST_CASE("rank rejects out-of-range triplets") {
  const PrimeField F(32003);
  CHECK_THROWS_AS(rank(SparseMatrix{2, 2, {{2, 0, 1}}}, F), InvalidInput);
}

TEST_CASE("koszul_differential examples") {
  const CurveModel model = genus_two();
  const int d = 7, r = d - 2;
  const SparseMatrix d11 = koszul_differential(model, d, 1, 1);
  CHECK(d11.n_cols == static_cast<std::size_t>(r + 1));
  CHECK(oracle::rank_mod_p(d11, kDefaultCharacteristic) == static_cast<std::size_t>(r + 1));
  const SparseMatrix d0 = koszul_differential(model, d, 0, 2);
  CHECK(d0.entries.empty());
  const SparseMatrix outer = koszul_differential(model, d, 1, 3);
  const SparseMatrix inner = koszul_differential(model, d, 2, 3);
  CHECK(outer.n_cols == inner.n_rows);
  CHECK(composes_to_zero(outer, inner, model.field()));
  // a deliberately broken inner map is caught
  SparseMatrix broken = inner;
  broken.entries.push_back({0, 0, 1});
  CHECK_FALSE(composes_to_zero(outer, broken, model.field()));
}

TEST_CASE("Koszul complex dimensions") {
  const KoszulComplex complex(genus_two(), 8, 3);
  CHECK(complex.num_generators() == 7);
  CHECK(complex.exterior_dim(3) == 35);
  CHECK(complex.term_dim(3, 2) == 35 * (16 - 2 + 1));
  const SparseMatrix m = complex.differential(3, 2);
  CHECK(m.n_cols == complex.term_dim(3, 2));
  CHECK(m.n_rows == complex.term_dim(2, 3));
}

TEST_CASE("koszul_betti examples") {
  const BettiTable twisted_cubic{{{0, 0}, q(1)}, {{1, 2}, q(3)}, {{2, 3}, q(2)}};
  CHECK(koszul_betti(CurveModel::rational(), 3) == twisted_cubic);
  CHECK(koszul_betti(elliptic(), 4) == BettiTable{{{0, 0}, q(1)}, {{1, 2}, q(2)}, {{2, 4}, q(1)}});
  CHECK(koszul_betti(elliptic(), 5) ==
        BettiTable{{{0, 0}, q(1)}, {{1, 2}, q(5)}, {{2, 3}, q(5)}, {{3, 5}, q(1)}});
  CHECK_THROWS_AS(koszul_betti(genus_two(), 5), DegreeTooSmall);
}

TEST_CASE("rational normal curves follow Eagon-Northcott") {
  for (int d = 3; d <= 7; ++d) {
    const BettiTable table = koszul_betti(CurveModel::rational(), d);
    BettiTable expected{{{0, 0}, q(1)}};
    for (int p = 1; p <= d - 1; ++p) {
      expected.set(p, p + 1, q(static_cast<long>(p * oracle::binomial(d, p + 1))));
    }
    CHECK(table == expected);
  }
}

TEST_CASE("parallel runs are deterministic") {
  KoszulOptions serial, parallel;
  parallel.jobs = 3;
  const KoszulResult a = koszul_resolve(genus_two(), 8, serial);
  const KoszulResult b = koszul_resolve(genus_two(), 8, parallel);
  CHECK(a.table == b.table);
  REQUIRE(a.blocks.size() == b.blocks.size());
  for (std::size_t k = 0; k < a.blocks.size(); ++k) {
    CHECK(a.blocks[k].p == b.blocks[k].p);
    CHECK(a.blocks[k].q == b.blocks[k].q);
    CHECK(a.blocks[k].rank == b.blocks[k].rank);
  }
  std::ostringstream log;
  write_timing_log(log, a.blocks);
  CHECK(log.str().rfind("# p q rows cols rank millis\n", 0) == 0);
}

TEST_CASE("curve tables satisfy the shape, degree and Hilbert series invariants") {
  struct Case {
    CurveModel model;
    int d;
  };
  const std::vector<Case> cases{{CurveModel::rational(), 4}, {elliptic(), 6}, {genus_two(), 7},
                                {genus_two(), 9},
                                {CurveModel::hyperelliptic(3, {1, 2, 0, 5, 0, 7, 1, 1}), 8}};
  for (const auto& [model, d] : cases) {
    const int g = model.genus(), r = d - g;
    const BettiTable table = koszul_betti(model, d);
    CHECK(check_curve_shape(table, g, r));
    CHECK(multiplicity(table) == d);
    CHECK(hilbert_numerator(rescale(table, q(1, d))) == curve_hn_expected(g, r));
    const auto series = oracle::series_over_one_minus_t(table, r + 1, 4);
    CHECK(series[0] == 1);
    for (int e = 1; e <= 3; ++e) CHECK(series[e] == e * d - g + 1);
    CHECK(koszul_betti(model.with_characteristic(65537), d) == table);
  }
}
