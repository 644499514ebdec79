#include "bsw/decompose.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "bsw/curve_asymptotics.hpp"
#include "bsw/errors.hpp"

namespace bsw {

BettiTable Decomposition::recompose() const {
  BettiTable sum;
  for (const auto& part : parts) sum += rescale(pure_diagram(part.degrees), part.coefficient);
  return sum;
}

DegreeSequence min_degree_sequence(const BettiTable& table) {
  const auto span = table.projective_span();
  if (!span) throw NotInCone("zero table has no degree sequence");
  std::vector<int> mins;
  mins.reserve(static_cast<std::size_t>(*span + 1));
  for (int i = 0; i <= *span; ++i) {
    const auto m = table.min_degree(i);
    if (!m) throw NotInCone("column " + std::to_string(i) + " is empty below the projective span");
    if (!mins.empty() && *m <= mins.back()) {
      throw NotInCone("column minima not strictly increasing at column " + std::to_string(i));
    }
    mins.push_back(*m);
  }
  return DegreeSequence(std::move(mins));
}

Decomposition decompose(const BettiTable& table) {
  if (table.empty()) throw NotInCone("cannot decompose the zero table");
  if (table.has_negative_entry()) throw NotInCone("table has a negative entry");

  const int span = *table.projective_span();
  if (span < 1) throw NotInCone("a single column is not a pure diagram of positive codimension");

  Decomposition out;
  BettiTable residual = table;
  while (!residual.empty()) {
    if (*residual.projective_span() != span) {
      throw NotInCone("residual changed projective dimension; parts of unequal codimension");
    }
    DegreeSequence e = min_degree_sequence(residual);
    const BettiTable pure = pure_diagram(e);

    Rational step = -1;
    for (std::size_t p = 0; p < e.size(); ++p) {
      const int i = static_cast<int>(p);
      const Rational ratio = residual.at(i, e[p]) / pure.at(i, e[p]);
      if (step < 0 || ratio < step) step = ratio;
    }
    residual -= rescale(pure, step);
    if (residual.has_negative_entry()) throw NotInCone("greedy step produced a negative entry");
    out.parts.push_back({std::move(e), step});
  }
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

CurveCoefficients curve_coefficients(const BettiTable& table, int genus, int r) {
  if (genus < 0 || r < genus + 2) {
    throw InvalidInput("curve coefficients need r >= g + 2, got g=" + std::to_string(genus) +
                       " r=" + std::to_string(r));
  }
  if (!check_curve_shape(table, genus, r)) {
    throw ShapeViolation("table does not have the two-row curve shape for g=" +
                         std::to_string(genus) + " r=" + std::to_string(r));
  }
  const Rational mult = multiplicity(table);
  if (mult <= 0) throw NotInCone("curve table has nonpositive multiplicity");
  const Decomposition parts = decompose(rescale(table, 1 / mult));

  CurveCoefficients out{genus, r, std::vector<Rational>(static_cast<std::size_t>(genus + 1))};
  for (const auto& part : parts.parts) {
    bool matched = false;
    for (int i = 0; i <= genus; ++i) {
      if (part.degrees == family_degree_sequence(i, r)) {
        out.c[static_cast<std::size_t>(i)] = part.coefficient;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ShapeViolation("decomposition part " + to_string(part.degrees) +
                           " is not a family sequence e(i, d)");
    }
  }
  return out;
}

void write_decomposition(std::ostream& out, const Decomposition& decomposition) {
  for (const auto& part : decomposition.parts) {
    out << to_string(part.degrees) << " : " << to_string(part.coefficient) << '\n';
  }
}

Decomposition parse_decomposition(std::istream& in) {
  Decomposition out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("decomposition line without ':'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const Rational coefficient = parse_rational(trim(line.substr(colon + 1)));
    if (coefficient <= 0) throw ParseError("decomposition coefficient must be positive");
    out.parts.push_back({parse_degree_sequence(trim(line.substr(0, colon))), coefficient});
  }
  return out;
}

}  // namespace bsw
