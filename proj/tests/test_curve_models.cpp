#include <map>
#include <utility>

#include "bsw/curve_model.hpp"
#include "bsw/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsw;

namespace {

using Combination = std::map<std::pair<int, int>, PrimeField::Element>;

Combination to_combination(const std::vector<MonomialTerm>& terms, const PrimeField& F) {
  Combination out;
  for (const auto& t : terms) {
    auto& slot = out[{t.monomial.a, t.monomial.b}];
    slot = F.add(slot, t.coefficient);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Combination times(const CurveModel& model, const Combination& lhs, const SectionMonomial& m) {
  const PrimeField& F = model.field();
  Combination out;
  for (const auto& [key, coeff] : lhs) {
    for (const auto& t : multiply(model, {key.first, key.second}, m)) {
      auto& slot = out[{t.monomial.a, t.monomial.b}];
      slot = F.add(slot, F.mul(coeff, t.coefficient));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Combination product(const CurveModel& model, const Combination& lhs, const Combination& rhs) {
  const PrimeField& F = model.field();
  Combination out;
  for (const auto& [key, coeff] : rhs) {
    for (const auto& [k2, v2] : times(model, lhs, {key.first, key.second})) {
      auto& slot = out[k2];
      slot = F.add(slot, F.mul(coeff, v2));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Affine points (x, y) of y^2 = f(x) over GF(p), found by brute force.
std::vector<std::pair<std::uint32_t, std::uint32_t>> curve_points(const CurveModel& model,
                                                                  std::size_t wanted) {
  const PrimeField& F = model.field();
  const std::uint32_t p = F.characteristic();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  for (std::uint32_t x = 0; x < p && points.size() < wanted; ++x) {
    PrimeField::Element fx = 0, power = 1;
    for (auto c : model.f()) {
      fx = F.add(fx, F.mul(c, power));
      power = F.mul(power, x);
    }
    for (std::uint32_t y = 1; y < p; ++y) {
      if (F.mul(y, y) == fx) {
        points.push_back({x, y});
        break;
      }
    }
  }
  return points;
}

PrimeField::Element evaluate(const PrimeField& F, const Combination& c, std::uint32_t x,
                             std::uint32_t y) {
  PrimeField::Element sum = 0;
  for (const auto& [key, coeff] : c) {
    PrimeField::Element v = coeff;
    for (int k = 0; k < key.first; ++k) v = F.mul(v, x);
    if (key.second == 1) v = F.mul(v, y);
    sum = F.add(sum, v);
  }
  return sum;
}

CurveModel genus_two(std::uint32_t p = kDefaultCharacteristic) {
  return CurveModel::hyperelliptic(2, {-1, 0, 0, 0, 0, 1}, p);
}

}  // namespace

TEST_CASE("section_basis examples") {
  const auto g2 = section_basis(genus_two(), 7, 1);
  CHECK(g2 == std::vector<SectionMonomial>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1}});
  CHECK(section_basis(CurveModel::rational(), 3, 1) ==
        std::vector<SectionMonomial>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  const CurveModel elliptic = CurveModel::hyperelliptic(1, {0, -1, 0, 1});
  CHECK(section_basis(elliptic, 4, 1) ==
        std::vector<SectionMonomial>{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
  CHECK(section_basis(genus_two(), 7, 0) == std::vector<SectionMonomial>{{0, 0}});
  CHECK(to_string(SectionMonomial{2, 1}) == "x^2y");
}

TEST_CASE("section_basis dimension is e*d - g + 1") {
  for (int g = 0; g <= 4; ++g) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(2 * g + 2), 0);
    f.front() = 1;
    f.back() = 1;
    const CurveModel model = g == 0 ? CurveModel::rational() : CurveModel::hyperelliptic(g, f);
    for (int d = model.min_degree(); d <= model.min_degree() + 6; ++d) {
      for (int e = 1; e <= 4; ++e) {
        const auto basis = section_basis(model, d, e);
        CHECK(basis.size() == static_cast<std::size_t>(e * d - g + 1));
        for (std::size_t k = 1; k < basis.size(); ++k) {
          CHECK(model.pole_order(basis[k - 1]) < model.pole_order(basis[k]));
        }
      }
    }
  }
  CHECK_THROWS_AS(section_basis(genus_two(), 4, 1), DegreeTooSmall);
}

TEST_CASE("multiply examples") {
  const CurveModel model = genus_two();
  CHECK(to_combination(multiply(model, {1, 0}, {0, 1}), model.field()) == Combination{{{1, 1}, 1}});
  CHECK(to_combination(multiply(model, {0, 1}, {0, 1}), model.field()) ==
        Combination{{{5, 0}, 1}, {{0, 0}, model.field().reduce(-1)}});
  for (const auto& m : section_basis(model, 7, 2)) {
    CHECK(to_combination(multiply(model, {0, 0}, m), model.field()) ==
          Combination{{{m.a, m.b}, 1}});
  }
}

TEST_CASE("multiplication is commutative and associative on low-degree sections") {
  const CurveModel model = CurveModel::hyperelliptic(2, {3, 1, 4, 1, 5, 9});
  const auto basis = section_basis(model, 5, 2);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const Combination ab = to_combination(multiply(model, a, b), model.field());
      CHECK(ab == to_combination(multiply(model, b, a), model.field()));
      for (const auto& c : basis) {
        const Combination bc = to_combination(multiply(model, b, c), model.field());
        CHECK(times(model, ab, c) == product(model, Combination{{{a.a, a.b}, 1}}, bc));
      }
    }
  }
}

TEST_CASE("products agree with evaluation at curve points") {
  const CurveModel model = CurveModel::hyperelliptic(3, {2, 0, 7, 1, 0, 3, 0, 1}, 1009);
  const PrimeField& F = model.field();
  const auto points = curve_points(model, 12);
  REQUIRE(points.size() == 12);
  const auto basis = section_basis(model, 8, 1);
  for (const auto& m1 : basis) {
    for (const auto& m2 : basis) {
      const Combination product = to_combination(multiply(model, m1, m2), F);
      for (const auto& [x, y] : points) {
        const auto v1 = evaluate(F, Combination{{{m1.a, m1.b}, 1}}, x, y);
        const auto v2 = evaluate(F, Combination{{{m2.a, m2.b}, 1}}, x, y);
        CHECK(evaluate(F, product, x, y) == F.mul(v1, v2));
      }
    }
  }
}

TEST_CASE("multiplication_matrix shapes and rank") {
  const SparseMatrix small = multiplication_matrix(CurveModel::rational(), 1, 1);
  CHECK(small.n_rows == 3);
  CHECK(small.n_cols == 4);
  std::vector<int> per_col(4, 0);
  for (const auto& t : small.entries) {
    CHECK(t.value == 1);
    ++per_col[t.col];
  }
  CHECK(per_col == std::vector<int>{1, 1, 1, 1});

  const SparseMatrix g2 = multiplication_matrix(genus_two(), 7, 1);
  CHECK(g2.n_rows == 13);
  CHECK(g2.n_cols == 36);
  CHECK(oracle::rank_mod_p(g2, kDefaultCharacteristic) == 13);

  // R_1 generates: multiplication is onto R_{e+1} for d >= 2g + 1
  for (int e = 1; e <= 3; ++e) {
    const SparseMatrix m = multiplication_matrix(CurveModel::hyperelliptic(1, {0, -1, 0, 1}), 4, e);
    CHECK(oracle::rank_mod_p(m, kDefaultCharacteristic) == m.n_rows);
  }
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, 0, 0, 1}), InvalidModel);   // x^3
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, -1, 1}), InvalidModel);     // wrong length
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, -1, 0, 0}), InvalidModel);  // degree drops
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, -1, 0, 1}, 2), InvalidModel);
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, -1, 0, 1}, 32001), InvalidModel);
  CHECK_THROWS_AS(CurveModel::rational(1u << 27), InvalidModel);
  // leading coefficient vanishing mod p
  CHECK_THROWS_AS(CurveModel::hyperelliptic(1, {0, -1, 0, 65537}, 65537), InvalidModel);

  const CurveModel model = genus_two();
  const CurveModel moved = model.with_characteristic(65537);
  CHECK(moved.field().characteristic() == 65537);
  CHECK(moved.f_coefficients() == model.f_coefficients());
  CHECK(moved.f() == std::vector<PrimeField::Element>{65536, 0, 0, 0, 0, 1});
}

TEST_CASE("prime field arithmetic") {
  const PrimeField F(32003);
  for (std::uint32_t a = 1; a < 32003; a += 97) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.reduce(-1) == 32002);
  CHECK(F.sub(3, 5) == 32001);
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(65535));
}
