#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsw/prime_field.hpp"

namespace bsw {

enum class CurveFamily { rational, hyperelliptic };

/// Section x^a y^b of a multiple of the point at infinity; b is 0 or 1.
struct SectionMonomial {
  int a = 0;
  int b = 0;
  friend bool operator==(const SectionMonomial&, const SectionMonomial&) = default;
};

std::string to_string(const SectionMonomial& m);

/// Coordinate ring model of a rational curve or a hyperelliptic curve
/// y^2 = f(x), deg f = 2g + 1, embedded by d times the point at infinity.
/// Immutable once constructed.
class CurveModel {
 public:
  using Element = PrimeField::Element;

  static CurveModel rational(std::uint32_t characteristic = kDefaultCharacteristic);
  /// `f_coeffs` are c_0..c_{2g+1}, low degree first, reduced mod p. Throws
  /// InvalidModel unless deg f = 2g + 1 over GF(p) and gcd(f, f') = 1.
  static CurveModel hyperelliptic(int genus, const std::vector<std::int64_t>& f_coeffs,
                                  std::uint32_t characteristic = kDefaultCharacteristic);

  CurveFamily family() const { return family_; }
  int genus() const { return genus_; }
  const PrimeField& field() const { return field_; }
  /// f reduced into the field (empty for the rational family).
  const std::vector<Element>& f() const { return f_; }
  /// f as given, before reduction.
  const std::vector<std::int64_t>& f_coefficients() const { return f_input_; }

  /// Same curve over another prime field; revalidates f there.
  CurveModel with_characteristic(std::uint32_t characteristic) const;

  /// Pole order at infinity: a for the rational family, 2a + b(2g+1) otherwise.
  int pole_order(const SectionMonomial& m) const;
  /// Smallest degree of the embedding line bundle: 2g + 1 (1 when g = 0).
  int min_degree() const { return genus_ == 0 ? 1 : 2 * genus_ + 1; }

 private:
  CurveModel(CurveFamily family, int genus, std::vector<std::int64_t> f_input,
             std::vector<Element> f, PrimeField field)
      : family_(family),
        genus_(genus),
        f_input_(std::move(f_input)),
        f_(std::move(f)),
        field_(field) {}

  CurveFamily family_;
  int genus_;
  std::vector<std::int64_t> f_input_;
  std::vector<Element> f_;
  PrimeField field_;
};

/// Basis of R_e = H^0(C, e d P_inf) sorted by pole order, then b.
/// Throws DegreeTooSmall when d < 2g + 1.
std::vector<SectionMonomial> section_basis(const CurveModel& model, int d, int e);

struct MonomialTerm {
  SectionMonomial monomial;
  PrimeField::Element coefficient = 0;
};

/// Product in the coordinate ring, reducing y^2 = f(x).
std::vector<MonomialTerm> multiply(const CurveModel& model, const SectionMonomial& m1,
                                   const SectionMonomial& m2);

/// Graded pieces R_0..R_{max_e} with pole-order lookup.
class GradedPieces {
 public:
  GradedPieces(const CurveModel& model, int d, int max_e);

  const CurveModel& model() const { return model_; }
  int degree() const { return d_; }
  int max_e() const { return static_cast<int>(bases_.size()) - 1; }
  const std::vector<SectionMonomial>& basis(int e) const {
    return bases_[static_cast<std::size_t>(e)];
  }
  std::size_t dim(int e) const { return e < 0 || e > max_e() ? 0 : basis(e).size(); }
  /// Position of m in basis(e), or -1 when m is not admissible there.
  int index_of(int e, const SectionMonomial& m) const;

 private:
  CurveModel model_;
  int d_;
  std::vector<std::vector<SectionMonomial>> bases_;
  std::vector<std::vector<int>> by_pole_order_;
};

struct Triplet {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  PrimeField::Element value = 0;
};

/// Sparse matrix over a prime field, at most one entry per (row, col).
struct SparseMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<Triplet> entries;
};

/// Matrix of R_1 (x) R_e -> R_{e+1}; column u * dim R_e + m is v_u * m_m.
SparseMatrix multiplication_matrix(const CurveModel& model, int d, int e);

}  // namespace bsw
