#include "bsw/prime_field.hpp"

#include <string>
#include <utility>

#include "bsw/errors.hpp"

namespace bsw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2 || p >= (1u << 26) || !is_prime(p)) {
    throw InvalidModel("field characteristic must be an odd prime below 2^26, got " +
                       std::to_string(p));
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InvalidInput("zero has no inverse in GF(" + std::to_string(p_) + ")");
  return reduce(t);
}

}  // namespace bsw
