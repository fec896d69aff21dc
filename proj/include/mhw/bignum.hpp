#pragma once

// Minimal unsigned big integer: just enough for witness checking, where
// a sum of a handful of huge powers of two must be divided exactly by a
// 64-bit modulus and the quotient printed in decimal.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mhw {

class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(uint64_t value);

  // Sum of 2^e over the given exponents; exponents must be distinct.
  static BigNat sum_of_bits(std::span<const uint64_t> exponents);

  void set_bit(uint64_t i);
  bool is_zero() const noexcept { return limbs_.empty(); }
  uint64_t bit_length() const noexcept;

  // In-place division by d != 0; returns the remainder.
  uint64_t div_u64(uint64_t d);
  uint64_t mod_u64(uint64_t d) const;

  std::string to_decimal() const;

  bool operator==(const BigNat&) const = default;

 private:
  void trim();
  std::vector<uint64_t> limbs_;  // little-endian; no trailing zero limbs
};

}  // namespace mhw
