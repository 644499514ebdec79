#include "bsw/rational.hpp"

#include <cctype>

#include "bsw/errors.hpp"

namespace bsw {

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, bool allow_sign, BigInt& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) return false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  out = BigInt(std::string(s.substr(pos)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, true, num)) {
      throw ParseError("not an integer or fraction: '" + std::string(text) + "'");
    }
  } else {
    if (!parse_integer(text.substr(0, slash), true, num) ||
        !parse_integer(text.substr(slash + 1), false, den)) {
      throw ParseError("not an integer or fraction: '" + std::string(text) + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int places) {
  BigInt scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  // round(|q| * 10^places), sign reattached afterwards
  BigInt num = abs(q.get_num()) * scale * 2 + q.get_den();
  BigInt den = q.get_den() * 2;
  BigInt rounded = num / den;
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
  }
  std::string out;
  if (q < 0 && rounded != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace bsw
