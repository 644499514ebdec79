#pragma once

#include <cstdint>

namespace bsw {

/// Prime field GF(p) for odd primes p < 2^26 (the dense kernels need
/// p^2 + p below 2^53). Elements are residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws InvalidModel unless p is an odd prime below 2^26.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t value) const {
    std::int64_t m = value % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<Element>(m);
  }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Inverse of a nonzero element.
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

}  // namespace bsw
