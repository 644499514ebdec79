#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bsw/betti_table.hpp"

namespace bsw {

struct DecompositionPart {
  DegreeSequence degrees;
  Rational coefficient;
  friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

/// Positive rational combination of pure diagrams. Parts are listed with
/// termwise strictly decreasing degree sequences.
struct Decomposition {
  std::vector<DecompositionPart> parts;

  BettiTable recompose() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Coefficients c_0..c_g of a normalized curve table against the family
/// pi_{0,d}, ..., pi_{g,d}.
struct CurveCoefficients {
  int genus = 0;
  int r = 0;
  std::vector<Rational> c;
};

/// Column minima d_i = min{ j : beta_{i,j} != 0 } for i = 0..projective span.
/// Throws NotInCone for an empty interior column or a non-increasing result.
DegreeSequence min_degree_sequence(const BettiTable& table);

/// Greedy peel: subtract the largest multiple of the pure diagram on the
/// minimal degree sequence until nothing is left. Throws NotInCone when the
/// table is not in the Cohen-Macaulay cone of its codimension.
Decomposition decompose(const BettiTable& table);

/// Normalizes by multiplicity, decomposes and reads off c_i for the family
/// e(i, d). Throws ShapeViolation if the shape check fails or a part is not a
/// family sequence.
CurveCoefficients curve_coefficients(const BettiTable& table, int genus, int r);

/// One `e_0,...,e_s : num/den` line per part.
void write_decomposition(std::ostream& out, const Decomposition& decomposition);
Decomposition parse_decomposition(std::istream& in);

}  // namespace bsw
