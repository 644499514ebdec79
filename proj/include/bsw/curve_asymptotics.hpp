#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bsw/betti_table.hpp"
#include "bsw/curve_model.hpp"
#include "bsw/koszul.hpp"

namespace bsw {

/// e(i, d) = (0, 2, 3, ..., r-i, r-i+2, ..., r+1), r entries.
/// Throws DegenerateFamily unless 0 <= i <= r-2.
DegreeSequence family_degree_sequence(int i, int r);

BettiTable family_pure_diagram(int i, int r);

/// Closed form ((r-i+1)/(r(r+1))) + ((r-1)(r-i+1)/(r(r+1))) t + (i/(r+1)) t^2,
/// codimension r - 1.
HilbertNumerator family_hn(int i, int r);

/// Hilbert numerator of a degree-normalized genus-g curve table:
/// 1/(r+g) + ((r-1)/(r+g)) t + (g/(r+g)) t^2. Requires r >= g + 2.
HilbertNumerator curve_hn_expected(int genus, int r);

/// Offsets of the family and curve Hilbert numerators from their leading terms
/// (1/r, 1 - (i+1)/r, i/r) and (1/r, 1 - (g+1)/r, g/r).
struct EpsilonDelta {
  int genus = 0;
  int r = 0;
  std::vector<std::array<Rational, 3>> epsilon;  // epsilon[i][j]
  std::array<Rational, 3> delta;
};

EpsilonDelta epsilon_delta(int genus, int r);

struct AsymptoticsRow {
  int d = 0;
  int r = 0;
  std::vector<Rational> c;
  Rational moment;         // sum_i i c_i
  Rational moment_target;  // g(r+1)/(r+g)
  Rational tail_bound;     // 1 - g(g-1)/(r+g)
  EpsilonDelta eps_delta;
  BettiTable betti;
  /// Set when a cross-check prime was requested: whether both fields agree.
  std::optional<bool> cross_check_agrees;
};

struct AsymptoticsReport {
  int genus = 0;
  std::uint32_t characteristic = 0;
  std::vector<AsymptoticsRow> rows;  // increasing d
};

struct ExperimentOptions {
  KoszulOptions koszul;
  std::optional<std::uint32_t> cross_check_characteristic;
  /// Receives each degree's block timings as it finishes.
  std::function<void(int d, const std::vector<KoszulBlockTiming>&)> on_blocks;
};

/// Builds one row from a computed curve Betti table of degree d. Throws
/// ShapeViolation/NotInCone on bad shape and ConsistencyError when one of the
/// exact identities (sum c = 1, moment, tail bound, multiplicity d, Hilbert
/// numerator) fails.
AsymptoticsRow analyze_curve_table(const BettiTable& betti, int genus, int d);

/// Computes Betti tables for d = d_min..d_max and analyzes each one.
/// Requires d_min >= 2g + 2.
AsymptoticsReport run_convergence_experiment(const CurveModel& model, int d_min, int d_max,
                                             const ExperimentOptions& options = {});

/// `d,r,c_0,...,c_g,moment,moment_target,tail_bound` with `num/den` cells.
void write_report_csv(std::ostream& out, const AsymptoticsReport& report);
/// Same columns rendered as decimals to 6 places.
void write_report_approx_csv(std::ostream& out, const AsymptoticsReport& report);
/// `d,r,i,eps_0,eps_1,eps_2` rows followed by `d,r,delta,delta_0,delta_1,delta_2`.
void write_report_eps_delta_csv(std::ostream& out, const AsymptoticsReport& report);

/// `report.csv` -> `report.approx.csv` (suffix appended when there is no `.csv`).
std::string sibling_path(const std::string& csv_path, const std::string& tag);

}  // namespace bsw
