#include "bsw/betti_table.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "bsw/errors.hpp"

namespace bsw {

BettiTable::BettiTable(std::initializer_list<std::pair<BettiIndex, Rational>> entries) {
  for (const auto& [idx, value] : entries) add(idx.i, idx.j, value);
}

Rational BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void BettiTable::set(int i, int j, const Rational& value) {
  if (i < 0) throw InvalidInput("negative homological index " + std::to_string(i));
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

void BettiTable::add(int i, int j, const Rational& value) {
  if (value == 0) return;
  if (i < 0) throw InvalidInput("negative homological index " + std::to_string(i));
  auto [it, inserted] = entries_.try_emplace({i, j}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::optional<int> BettiTable::projective_span() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.i;
}

std::optional<int> BettiTable::min_degree(int i) const {
  auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
  if (it == entries_.end() || it->first.i != i) return std::nullopt;
  return it->first.j;
}

bool BettiTable::has_negative_entry() const {
  for (const auto& [idx, value] : entries_) {
    if (value < 0) return true;
  }
  return false;
}

BettiTable& BettiTable::operator+=(const BettiTable& other) {
  for (const auto& [idx, value] : other.entries_) add(idx.i, idx.j, value);
  return *this;
}

BettiTable& BettiTable::operator-=(const BettiTable& other) {
  for (const auto& [idx, value] : other.entries_) add(idx.i, idx.j, -value);
  return *this;
}

DegreeSequence::DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidDegreeSequence("empty degree sequence");
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k] <= entries_[k - 1]) {
      throw InvalidDegreeSequence("degree sequence not strictly increasing: " +
                                  std::to_string(entries_[k - 1]) + " then " +
                                  std::to_string(entries_[k]));
    }
  }
}

bool DegreeSequence::termwise_less(const DegreeSequence& other) const {
  if (size() != other.size()) return false;
  bool strict = false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (entries_[k] > other.entries_[k]) return false;
    if (entries_[k] < other.entries_[k]) strict = true;
  }
  return strict;
}

std::string to_string(const DegreeSequence& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(e[k]);
  }
  return out;
}

DegreeSequence parse_degree_sequence(const std::string& text) {
  std::vector<int> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad degree sequence entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("bad degree sequence entry '" + item + "'");
    entries.push_back(value);
  }
  return DegreeSequence(std::move(entries));
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, Rational>> terms) {
  for (const auto& [exponent, c] : terms) add(exponent, c);
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPolynomial::evaluate_at_one() const {
  Rational sum = 0;
  for (const auto& [exponent, c] : terms_) sum += c;
  return sum;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_by_one_minus_t() const {
  if (terms_.empty()) return LaurentPolynomial{};
  if (evaluate_at_one() != 0) return std::nullopt;
  // K = (1 - t) Q  <=>  q_j = sum_{k <= j} k_k, and Q stops one below max(K).
  LaurentPolynomial quotient;
  const int lo = terms_.begin()->first;
  const int hi = terms_.rbegin()->first;
  Rational running = 0;
  auto it = terms_.begin();
  for (int j = lo; j < hi; ++j) {
    if (it != terms_.end() && it->first == j) {
      running += it->second;
      ++it;
    }
    quotient.add(j, running);
  }
  return quotient;
}

LaurentPolynomial LaurentPolynomial::multiply_by_one_minus_t() const {
  LaurentPolynomial out;
  for (const auto& [exponent, c] : terms_) {
    out.add(exponent, c);
    out.add(exponent + 1, -c);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [exponent, c] : other.terms_) add(exponent, c);
  return *this;
}

std::string to_string(const LaurentPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, c] : poly.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out.push_back('-');
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = magnitude == 1;
    if (exponent == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (!unit) out += to_string(magnitude) + " ";
    out += "t";
    if (exponent != 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

BettiTable pure_diagram(const DegreeSequence& e) {
  if (e.size() < 2) {
    throw InvalidDegreeSequence("pure diagram needs at least two degrees, got " + to_string(e));
  }
  const std::size_t s = e.size() - 1;
  const BigInt normalization = factorial(static_cast<unsigned>(s));
  BettiTable out;
  for (std::size_t p = 0; p <= s; ++p) {
    BigInt denominator = 1;
    for (std::size_t l = 0; l <= s; ++l) {
      if (l != p) denominator *= std::abs(e[l] - e[p]);
    }
    out.set(static_cast<int>(p), e[p], make_rational(normalization, denominator));
  }
  return out;
}

LaurentPolynomial alternating_sum_poly(const BettiTable& table) {
  LaurentPolynomial out;
  for (const auto& [idx, value] : table) {
    out.add(idx.j, idx.i % 2 == 0 ? value : Rational(-value));
  }
  return out;
}

namespace {

HilbertNumerator reduce(const BettiTable& table) {
  if (table.empty()) throw UndefinedOnZero("Hilbert numerator of the zero table");
  LaurentPolynomial current = alternating_sum_poly(table);
  if (current.is_zero()) {
    throw UndefinedOnZero("alternating sum of the table vanishes identically");
  }
  int codim = 0;
  while (auto next = current.divide_by_one_minus_t()) {
    current = std::move(*next);
    ++codim;
  }
  return {std::move(current), codim};
}

}  // namespace

int formal_codim(const BettiTable& table) { return reduce(table).codim; }

HilbertNumerator hilbert_numerator(const BettiTable& table) { return reduce(table); }

Rational multiplicity(const BettiTable& table) { return reduce(table).multiplicity(); }

BettiTable rescale(const BettiTable& table, const Rational& factor) {
  BettiTable out;
  if (factor == 0) return out;
  for (const auto& [idx, value] : table) out.set(idx.i, idx.j, value * factor);
  return out;
}

bool check_curve_shape(const BettiTable& table, int genus, int r) {
  if (table.at(0, 0) == 0) return false;
  for (const auto& [idx, value] : table) {
    const auto [p, q] = idx;
    if (p == 0 && q == 0) continue;
    if (q == p + 1 && p >= 1 && p <= r - 1) continue;
    if (q == p + 2 && p >= r - genus && p <= r - 1) continue;
    return false;
  }
  return true;
}

}  // namespace bsw
