#include "bsw/curve_asymptotics.hpp"

#include <ostream>

#include "bsw/decompose.hpp"
#include "bsw/errors.hpp"

namespace bsw {

DegreeSequence family_degree_sequence(int i, int r) {
  if (i < 0 || i > r - 2) {
    throw DegenerateFamily("family sequence needs 0 <= i <= r - 2, got i=" + std::to_string(i) +
                           " r=" + std::to_string(r));
  }
  std::vector<int> e{0};
  for (int v = 2; v <= r - i; ++v) e.push_back(v);
  for (int v = r - i + 2; v <= r + 1; ++v) e.push_back(v);
  return DegreeSequence(std::move(e));
}

BettiTable family_pure_diagram(int i, int r) { return pure_diagram(family_degree_sequence(i, r)); }

HilbertNumerator family_hn(int i, int r) {
  family_degree_sequence(i, r);  // validates the range
  const Rational base = make_rational(r - i + 1, static_cast<long>(r) * (r + 1));
  HilbertNumerator hn;
  hn.numerator.add(0, base);
  hn.numerator.add(1, base * (r - 1));
  hn.numerator.add(2, make_rational(i, r + 1));
  hn.codim = r - 1;
  return hn;
}

HilbertNumerator curve_hn_expected(int genus, int r) {
  if (genus < 0 || r < genus + 2) {
    throw InvalidInput("curve Hilbert numerator needs r >= g + 2, got g=" +
                       std::to_string(genus) + " r=" + std::to_string(r));
  }
  HilbertNumerator hn;
  hn.numerator.add(0, make_rational(1, r + genus));
  hn.numerator.add(1, make_rational(r - 1, r + genus));
  hn.numerator.add(2, make_rational(genus, r + genus));
  hn.codim = r - 1;
  return hn;
}

EpsilonDelta epsilon_delta(int genus, int r) {
  const HilbertNumerator curve = curve_hn_expected(genus, r);
  EpsilonDelta out;
  out.genus = genus;
  out.r = r;
  const Rational inv_r = make_rational(1, r);
  for (int i = 0; i <= genus; ++i) {
    const HilbertNumerator hn = family_hn(i, r);
    out.epsilon.push_back({hn.coefficient(0) - inv_r,
                           hn.coefficient(1) - (1 - (i + 1) * inv_r),
                           hn.coefficient(2) - i * inv_r});
  }
  out.delta = {curve.coefficient(0) - inv_r, curve.coefficient(1) - (1 - (genus + 1) * inv_r),
               curve.coefficient(2) - genus * inv_r};
  return out;
}

AsymptoticsRow analyze_curve_table(const BettiTable& betti, int genus, int d) {
  const int r = d - genus;
  if (!check_curve_shape(betti, genus, r)) {
    throw ShapeViolation("degree " + std::to_string(d) + " table fails the curve shape check");
  }
  if (multiplicity(betti) != d) {
    throw ConsistencyError("degree " + std::to_string(d) + " table has multiplicity " +
                           to_string(multiplicity(betti)));
  }
  if (!(hilbert_numerator(rescale(betti, make_rational(1, d))) == curve_hn_expected(genus, r))) {
    throw ConsistencyError("degree " + std::to_string(d) +
                           " table has an unexpected Hilbert numerator");
  }

  AsymptoticsRow row;
  row.d = d;
  row.r = r;
  row.c = curve_coefficients(betti, genus, r).c;
  row.betti = betti;
  Rational sum = 0;
  for (std::size_t i = 0; i < row.c.size(); ++i) {
    sum += row.c[i];
    row.moment += static_cast<long>(i) * row.c[i];
  }
  row.moment_target = make_rational(static_cast<long>(genus) * (r + 1), r + genus);
  row.tail_bound = 1 - make_rational(static_cast<long>(genus) * (genus - 1), r + genus);
  row.eps_delta = epsilon_delta(genus, r);

  if (sum != 1) throw ConsistencyError("coefficients do not sum to 1 at d=" + std::to_string(d));
  if (row.moment != row.moment_target) {
    throw ConsistencyError("moment identity fails at d=" + std::to_string(d));
  }
  if (row.c.back() < row.tail_bound) {
    throw ConsistencyError("tail bound fails at d=" + std::to_string(d));
  }
  return row;
}

AsymptoticsReport run_convergence_experiment(const CurveModel& model, int d_min, int d_max,
                                             const ExperimentOptions& options) {
  const int g = model.genus();
  if (d_min < 2 * g + 2) {
    throw DegreeTooSmall("experiments need d_min >= 2g + 2 = " + std::to_string(2 * g + 2));
  }
  if (d_max < d_min) throw InvalidInput("empty degree range");

  std::optional<CurveModel> cross;
  if (options.cross_check_characteristic) {
    cross = model.with_characteristic(*options.cross_check_characteristic);
  }

  AsymptoticsReport report;
  report.genus = g;
  report.characteristic = model.field().characteristic();
  for (int d = d_min; d <= d_max; ++d) {
    KoszulResult computed = koszul_resolve(model, d, options.koszul);
    if (options.on_blocks) options.on_blocks(d, computed.blocks);
    AsymptoticsRow row = analyze_curve_table(computed.table, g, d);
    if (cross) row.cross_check_agrees = koszul_betti(*cross, d, options.koszul) == computed.table;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

void write_header(std::ostream& out, int genus) {
  out << "d,r";
  for (int i = 0; i <= genus; ++i) out << ",c_" << i;
  out << ",moment,moment_target,tail_bound\n";
}

template <typename Render>
void write_rows(std::ostream& out, const AsymptoticsReport& report, Render render) {
  write_header(out, report.genus);
  for (const auto& row : report.rows) {
    out << row.d << ',' << row.r;
    for (const auto& c : row.c) out << ',' << render(c);
    out << ',' << render(row.moment) << ',' << render(row.moment_target) << ','
        << render(row.tail_bound) << '\n';
  }
}

}  // namespace

void write_report_csv(std::ostream& out, const AsymptoticsReport& report) {
  write_rows(out, report, [](const Rational& q) { return to_string(q); });
}

void write_report_approx_csv(std::ostream& out, const AsymptoticsReport& report) {
  write_rows(out, report, [](const Rational& q) { return to_decimal(q, 6); });
}

void write_report_eps_delta_csv(std::ostream& out, const AsymptoticsReport& report) {
  out << "d,r,i,eps_0,eps_1,eps_2\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.eps_delta.epsilon.size(); ++i) {
      const auto& eps = row.eps_delta.epsilon[i];
      out << row.d << ',' << row.r << ',' << i << ',' << to_string(eps[0]) << ','
          << to_string(eps[1]) << ',' << to_string(eps[2]) << '\n';
    }
  }
  out << "d,r,delta,delta_0,delta_1,delta_2\n";
  for (const auto& row : report.rows) {
    const auto& delta = row.eps_delta.delta;
    out << row.d << ',' << row.r << ",delta," << to_string(delta[0]) << ','
        << to_string(delta[1]) << ',' << to_string(delta[2]) << '\n';
  }
}

std::string sibling_path(const std::string& csv_path, const std::string& tag) {
  const std::string ext = ".csv";
  if (csv_path.size() >= ext.size() &&
      csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0) {
    return csv_path.substr(0, csv_path.size() - ext.size()) + "." + tag + ext;
  }
  return csv_path + "." + tag + ext;
}

}  // namespace bsw
