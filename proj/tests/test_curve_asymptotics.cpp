#include <sstream>

#include "bsw/curve_asymptotics.hpp"
#include "bsw/errors.hpp"
#include "doctest.h"

using namespace bsw;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

HilbertNumerator hn_of(std::vector<Rational> coeffs, int codim) {
  HilbertNumerator hn;
  for (std::size_t k = 0; k < coeffs.size(); ++k) hn.numerator.add(static_cast<int>(k), coeffs[k]);
  hn.codim = codim;
  return hn;
}

CurveModel elliptic() { return CurveModel::hyperelliptic(1, {0, -1, 0, 1}); }
CurveModel genus_two() { return CurveModel::hyperelliptic(2, {-1, 0, 0, 0, 0, 1}); }

}  // namespace

TEST_CASE("family_degree_sequence examples") {
  CHECK(family_degree_sequence(0, 3) == DegreeSequence({0, 2, 3}));
  CHECK(family_degree_sequence(1, 3) == DegreeSequence({0, 2, 4}));
  CHECK(family_degree_sequence(2, 4) == DegreeSequence({0, 2, 4, 5}));
  CHECK(family_degree_sequence(3, 8) == DegreeSequence({0, 2, 3, 4, 5, 7, 8, 9}));
  CHECK_THROWS_AS(family_degree_sequence(2, 3), DegenerateFamily);
  CHECK_THROWS_AS(family_degree_sequence(-1, 3), DegenerateFamily);
}

TEST_CASE("family_degree_sequence has one jump") {
  for (int r = 2; r <= 30; ++r) {
    for (int i = 0; i <= r - 2; ++i) {
      const std::vector<int> e = family_degree_sequence(i, r).entries();
      REQUIRE(e.size() == static_cast<std::size_t>(r));
      CHECK(e.front() == 0);
      CHECK(e.back() == (i == 0 ? r : r + 1));
      int jumps = 0;
      for (std::size_t k = 2; k < e.size(); ++k) jumps += e[k] - e[k - 1] == 2;
      CHECK(jumps == (i == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("family_pure_diagram entries") {
  CHECK(family_pure_diagram(1, 3) == BettiTable{{{0, 0}, q(1, 4)}, {{1, 2}, q(1, 2)}, {{2, 4}, q(1, 4)}});
  CHECK(family_pure_diagram(0, 3).at(0, 0) == q(1, 3));
  CHECK(family_pure_diagram(1, 4).at(3, 5) == q(1, 5));
  for (int r = 2; r <= 30; ++r) {
    for (int i = 0; i <= r - 2; ++i) {
      const BettiTable pi = family_pure_diagram(i, r);
      CHECK(pi.at(0, 0) == q(r + 1 - i, r * (r + 1)));
      CHECK(pi.at(r - 1, r + 1) == q(i, r + 1));
      CHECK(formal_codim(pi) == r - 1);
    }
  }
}

TEST_CASE("family_hn examples") {
  CHECK(family_hn(1, 4) == hn_of({q(1, 5), q(3, 5), q(1, 5)}, 3));
  CHECK(family_hn(1, 3) == hn_of({q(1, 4), q(1, 2), q(1, 4)}, 2));
  for (int r = 2; r <= 20; ++r) CHECK(family_hn(0, r).coefficient(2) == 0);
}

TEST_CASE("family_hn matches the generic Hilbert numerator") {
  for (int r = 2; r <= 30; ++r) {
    for (int i = 0; i <= r - 2; ++i) {
      CHECK(family_hn(i, r) == hilbert_numerator(family_pure_diagram(i, r)));
    }
  }
}

TEST_CASE("curve_hn_expected examples") {
  CHECK(curve_hn_expected(0, 3) == hn_of({q(1, 3), q(2, 3)}, 2));
  CHECK(curve_hn_expected(1, 4) == hn_of({q(1, 5), q(3, 5), q(1, 5)}, 3));
  CHECK(curve_hn_expected(2, 10) == hn_of({q(1, 12), q(9, 12), q(2, 12)}, 9));
  CHECK_THROWS_AS(curve_hn_expected(2, 3), InvalidInput);
}

TEST_CASE("curve_hn_expected is the family average for the moment weights") {
  // the family numerators are affine in i, so any weights summing to 1 with
  // moment g(r+1)/(r+g) reproduce the curve numerator
  for (int g = 1; g <= 4; ++g) {
    for (int r = g + 2; r <= 25; ++r) {
      const Rational m = q(g * (r + 1), r + g);
      const Rational c_top = m - (g - 1);
      const Rational c_low = 1 - c_top;
      HilbertNumerator sum;
      sum.codim = r - 1;
      const HilbertNumerator a = family_hn(g - 1, r), b = family_hn(g, r);
      for (int k = 0; k <= 2; ++k) {
        sum.numerator.add(k, c_low * a.coefficient(k) + c_top * b.coefficient(k));
      }
      CHECK(sum == curve_hn_expected(g, r));
    }
  }
}

TEST_CASE("epsilon_delta examples") {
  CHECK(epsilon_delta(2, 10).epsilon[2][0] == q(-1, 55));
  for (int r = 2; r <= 30; ++r) CHECK(epsilon_delta(0, r).epsilon[0][0] == 0);
  CHECK(epsilon_delta(2, 10).delta[2] == q(-1, 30));
}

TEST_CASE("epsilon_delta closed forms and bounds") {
  for (int g = 0; g <= 5; ++g) {
    for (int r = g + 2; r <= 30; ++r) {
      const EpsilonDelta ed = epsilon_delta(g, r);
      REQUIRE(ed.epsilon.size() == static_cast<std::size_t>(g + 1));
      const Rational bound = q(g * (g + 1), r);
      for (int i = 0; i <= g; ++i) {
        CHECK(ed.epsilon[i][0] == q(-i, r * (r + 1)));
        CHECK(ed.epsilon[i][1] == q(2 * i, r * (r + 1)));
        CHECK(ed.epsilon[i][2] == q(-i, r * (r + 1)));
        for (int j = 0; j < 3; ++j) CHECK(r * abs(ed.epsilon[i][j]) <= bound);
      }
      Rational delta_sum = 0;
      for (int j = 0; j < 3; ++j) {
        CHECK(r * abs(ed.delta[j]) <= bound);
        delta_sum += ed.delta[j];
      }
      CHECK(delta_sum == 0);
    }
  }
}

TEST_CASE("analyze_curve_table identities on synthetic input") {
  // d * pi_{g,d} is the limiting table; it satisfies all the exact identities
  // except the moment equation, which needs the genuine mixture
  const int g = 1, d = 6, r = d - g;
  const AsymptoticsRow row = analyze_curve_table(rescale(family_pure_diagram(g, r), q(d)), g, d);
  CHECK(row.c == std::vector<Rational>{q(0), q(1)});
  CHECK(row.moment == row.moment_target);
  CHECK(row.tail_bound == 1);
  CHECK_THROWS_AS(analyze_curve_table(BettiTable{{{0, 0}, q(1)}, {{0, 1}, q(1)}}, 1, 6),
                  ShapeViolation);
  // wrong degree: shape and decomposition fine, multiplicity off
  CHECK_THROWS_AS(analyze_curve_table(rescale(family_pure_diagram(g, r), q(d + 1)), g, d),
                  ConsistencyError);
}

TEST_CASE("run_convergence_experiment examples") {
  SUBCASE("rational normal curves") {
    const AsymptoticsReport report = run_convergence_experiment(CurveModel::rational(), 3, 5);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) CHECK(row.c == std::vector<Rational>{q(1)});
  }
  SUBCASE("elliptic normal curves") {
    const AsymptoticsReport report = run_convergence_experiment(elliptic(), 4, 6);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
      CHECK(row.c == std::vector<Rational>{q(0), q(1)});
    }
    CHECK(report.rows[0].betti == BettiTable{{{0, 0}, q(1)}, {{1, 2}, q(2)}, {{2, 4}, q(1)}});
  }
  SUBCASE("genus two tail bound") {
    ExperimentOptions options;
    options.cross_check_characteristic = 65537;
    const AsymptoticsReport report = run_convergence_experiment(genus_two(), 8, 8, options);
    REQUIRE(report.rows.size() == 1);
    const AsymptoticsRow& row = report.rows[0];
    CHECK(row.r == 6);
    CHECK(row.c[2] >= q(3, 4));
    CHECK(row.moment == q(2 * 7, 8));
    REQUIRE(row.cross_check_agrees.has_value());
    CHECK(*row.cross_check_agrees);
  }
  CHECK_THROWS_AS(run_convergence_experiment(genus_two(), 5, 8), DegreeTooSmall);
}

TEST_CASE("report writers") {
  const AsymptoticsReport report = run_convergence_experiment(elliptic(), 4, 5);
  std::ostringstream csv, approx, eps;
  write_report_csv(csv, report);
  CHECK(csv.str() ==
        "d,r,c_0,c_1,moment,moment_target,tail_bound\n"
        "4,3,0,1,1,1,1\n"
        "5,4,0,1,1,1,1\n");
  write_report_approx_csv(approx, report);
  CHECK(approx.str().rfind("d,r,c_0,c_1,moment,moment_target,tail_bound\n4,3,0.000000,1.000000,", 0) == 0);
  write_report_eps_delta_csv(eps, report);
  CHECK(eps.str().find("d,r,i,eps_0,eps_1,eps_2\n") == 0);

  CHECK(sibling_path("out/report.csv", "approx") == "out/report.approx.csv");
  CHECK(sibling_path("report", "epsdelta") == "report.epsdelta.csv");
}
