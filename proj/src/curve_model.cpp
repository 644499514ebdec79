#include "bsw/curve_model.hpp"

#include <algorithm>
#include <map>

#include "bsw/errors.hpp"

namespace bsw {

std::string to_string(const SectionMonomial& m) {
  std::string out;
  if (m.a == 0 && m.b == 0) return "1";
  if (m.a > 0) out += m.a == 1 ? "x" : "x^" + std::to_string(m.a);
  if (m.b > 0) out += "y";
  return out;
}

namespace {

using Poly = std::vector<PrimeField::Element>;  // low degree first, no trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a by b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, const PrimeField& F) {
  trim(a);
  const auto lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const auto factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = F.sub(a[shift + k], F.mul(factor, b[k]));
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly derivative(const Poly& f, const PrimeField& F) {
  Poly out;
  for (std::size_t k = 1; k < f.size(); ++k) {
    out.push_back(F.mul(F.reduce(static_cast<std::int64_t>(k)), f[k]));
  }
  trim(out);
  return out;
}

}  // namespace

CurveModel CurveModel::rational(std::uint32_t characteristic) {
  return CurveModel(CurveFamily::rational, 0, {}, {}, PrimeField(characteristic));
}

CurveModel CurveModel::hyperelliptic(int genus, const std::vector<std::int64_t>& f_coeffs,
                                     std::uint32_t characteristic) {
  const PrimeField F(characteristic);
  if (genus < 1) throw InvalidModel("hyperelliptic model needs genus >= 1");
  const std::size_t expected = static_cast<std::size_t>(2 * genus + 2);
  if (f_coeffs.size() != expected) {
    throw InvalidModel("genus " + std::to_string(genus) + " needs " + std::to_string(expected) +
                       " f coefficients, got " + std::to_string(f_coeffs.size()));
  }
  Poly f;
  for (auto c : f_coeffs) f.push_back(F.reduce(c));
  if (f.back() == 0) {
    throw InvalidModel("leading coefficient of f vanishes mod " + std::to_string(characteristic));
  }
  const Poly g = poly_gcd(f, derivative(f, F), F);
  if (g.size() != 1) {
    throw InvalidModel("f is not squarefree over GF(" + std::to_string(characteristic) + ")");
  }
  return CurveModel(CurveFamily::hyperelliptic, genus, f_coeffs, std::move(f), F);
}

CurveModel CurveModel::with_characteristic(std::uint32_t characteristic) const {
  if (family_ == CurveFamily::rational) return rational(characteristic);
  return hyperelliptic(genus_, f_input_, characteristic);
}

int CurveModel::pole_order(const SectionMonomial& m) const {
  if (family_ == CurveFamily::rational) return m.a;
  return 2 * m.a + m.b * (2 * genus_ + 1);
}

std::vector<SectionMonomial> section_basis(const CurveModel& model, int d, int e) {
  if (d < model.min_degree()) {
    throw DegreeTooSmall("degree " + std::to_string(d) + " below " +
                         std::to_string(model.min_degree()) + " for genus " +
                         std::to_string(model.genus()));
  }
  if (e < 0) throw InvalidInput("negative graded piece index");
  const int bound = e * d;
  std::vector<SectionMonomial> basis;
  if (model.family() == CurveFamily::rational) {
    for (int a = 0; a <= bound; ++a) basis.push_back({a, 0});
    return basis;
  }
  for (int b = 0; b <= 1; ++b) {
    for (int a = 0; model.pole_order({a, b}) <= bound; ++a) basis.push_back({a, b});
  }
  std::sort(basis.begin(), basis.end(), [&](const SectionMonomial& l, const SectionMonomial& r) {
    const int pl = model.pole_order(l), pr = model.pole_order(r);
    return pl != pr ? pl < pr : l.b < r.b;
  });
  return basis;
}

std::vector<MonomialTerm> multiply(const CurveModel& model, const SectionMonomial& m1,
                                   const SectionMonomial& m2) {
  const int a = m1.a + m2.a;
  const int b = m1.b + m2.b;
  if (b <= 1) return {{{a, b}, 1}};
  std::vector<MonomialTerm> out;
  const auto& f = model.f();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] != 0) out.push_back({{a + static_cast<int>(k), 0}, f[k]});
  }
  return out;
}

GradedPieces::GradedPieces(const CurveModel& model, int d, int max_e) : model_(model), d_(d) {
  for (int e = 0; e <= max_e; ++e) {
    bases_.push_back(section_basis(model, d, e));
    std::vector<int> lookup(static_cast<std::size_t>(e * d + 1), -1);
    const auto& basis = bases_.back();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      lookup[static_cast<std::size_t>(model.pole_order(basis[k]))] = static_cast<int>(k);
    }
    by_pole_order_.push_back(std::move(lookup));
  }
}

int GradedPieces::index_of(int e, const SectionMonomial& m) const {
  if (e < 0 || e > max_e() || m.b < 0 || m.b > 1 || m.a < 0) return -1;
  if (model_.family() == CurveFamily::rational && m.b != 0) return -1;
  const int order = model_.pole_order(m);
  const auto& lookup = by_pole_order_[static_cast<std::size_t>(e)];
  if (order >= static_cast<int>(lookup.size())) return -1;
  return lookup[static_cast<std::size_t>(order)];
}

SparseMatrix multiplication_matrix(const CurveModel& model, int d, int e) {
  const GradedPieces pieces(model, d, e + 1);
  const auto& source = pieces.basis(e);
  const auto& linear = pieces.basis(1);
  SparseMatrix out;
  out.n_rows = pieces.dim(e + 1);
  out.n_cols = linear.size() * source.size();
  for (std::size_t u = 0; u < linear.size(); ++u) {
    for (std::size_t m = 0; m < source.size(); ++m) {
      const auto col = static_cast<std::uint32_t>(u * source.size() + m);
      for (const auto& term : multiply(model, linear[u], source[m])) {
        const int row = pieces.index_of(e + 1, term.monomial);
        if (row < 0) throw InvalidModel("product left the target graded piece");
        out.entries.push_back({static_cast<std::uint32_t>(row), col, term.coefficient});
      }
    }
  }
  return out;
}

}  // namespace bsw
