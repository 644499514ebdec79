#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsw/rational.hpp"

namespace bsw {

/// Position (homological index i, internal degree j) of a Betti number.
struct BettiIndex {
  int i = 0;
  int j = 0;
  auto operator<=>(const BettiIndex&) const = default;
};

/// Finitely supported table of exact rationals indexed by (i, j), i >= 0.
/// Only nonzero values are stored; setting a zero erases the entry.
class BettiTable {
 public:
  using Storage = std::map<BettiIndex, Rational>;

  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<BettiIndex, Rational>> entries);

  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& value);
  void add(int i, int j, const Rational& value);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Storage& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Largest homological index carrying a nonzero entry; nullopt when empty.
  std::optional<int> projective_span() const;
  std::optional<int> min_degree(int i) const;
  bool has_negative_entry() const;

  BettiTable& operator+=(const BettiTable& other);
  BettiTable& operator-=(const BettiTable& other);
  friend BettiTable operator+(BettiTable a, const BettiTable& b) { return a += b; }
  friend BettiTable operator-(BettiTable a, const BettiTable& b) { return a -= b; }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Storage entries_;
};

/// Strictly increasing integer sequence e_0 < ... < e_s.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws InvalidDegreeSequence unless strictly increasing and nonempty.
  explicit DegreeSequence(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t p) const { return entries_[p]; }

  /// Termwise comparison for sequences of equal length.
  bool termwise_less(const DegreeSequence& other) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const DegreeSequence& e);
/// Parses `0,2,3`. Throws ParseError on malformed text and
/// InvalidDegreeSequence on a non-increasing sequence.
DegreeSequence parse_degree_sequence(const std::string& text);

/// Laurent polynomial in t with rational coefficients; zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<int, Rational>> terms);

  Rational coefficient(int exponent) const;
  void add(int exponent, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  Rational evaluate_at_one() const;

  /// Divides by (1 - t) provided the value at t = 1 vanishes.
  std::optional<LaurentPolynomial> divide_by_one_minus_t() const;
  LaurentPolynomial multiply_by_one_minus_t() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// `1/4 + 1/2 t + 1/4 t^2`; `0` for the zero polynomial.
std::string to_string(const LaurentPolynomial& poly);

struct HilbertNumerator {
  LaurentPolynomial numerator;
  int codim = 0;

  Rational coefficient(int exponent) const { return numerator.coefficient(exponent); }
  Rational multiplicity() const { return numerator.evaluate_at_one(); }
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

BettiTable pure_diagram(const DegreeSequence& e);

/// K(t) = sum over (i, j) of (-1)^i beta_{i,j} t^j.
LaurentPolynomial alternating_sum_poly(const BettiTable& table);

/// Order of vanishing of K(t) at t = 1. Throws UndefinedOnZero.
int formal_codim(const BettiTable& table);

HilbertNumerator hilbert_numerator(const BettiTable& table);
Rational multiplicity(const BettiTable& table);
BettiTable rescale(const BettiTable& table, const Rational& factor);

/// Support contained in {(0,0)} u {(p,p+1) : 1 <= p <= r-1}
/// u {(p,p+2) : r-g <= p <= r-1}, with a nonzero (0,0) entry.
bool check_curve_shape(const BettiTable& table, int genus, int r);

}  // namespace bsw
