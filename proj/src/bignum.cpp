#include "mhw/bignum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mhw {

BigNat::BigNat(uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigNat BigNat::sum_of_bits(std::span<const uint64_t> exponents) {
  BigNat out;
  for (uint64_t e : exponents) out.set_bit(e);
  return out;
}

void BigNat::set_bit(uint64_t i) {
  size_t limb = i / 64;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= uint64_t{1} << (i % 64);
}

uint64_t BigNat::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

uint64_t BigNat::div_u64(uint64_t d) {
  if (d == 0) throw std::invalid_argument("BigNat::div_u64: division by zero");
  __uint128_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    __uint128_t cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<uint64_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<uint64_t>(rem);
}

uint64_t BigNat::mod_u64(uint64_t d) const {
  if (d == 0) throw std::invalid_argument("BigNat::mod_u64: division by zero");
  __uint128_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 64) | limbs_[i]) % d;
  }
  return static_cast<uint64_t>(rem);
}

std::string BigNat::to_decimal() const {
  if (limbs_.empty()) return "0";
  BigNat tmp = *this;
  constexpr uint64_t kChunk = 10'000'000'000'000'000'000ull;  // 10^19
  std::vector<uint64_t> groups;
  while (!tmp.is_zero()) {
    groups.push_back(tmp.div_u64(kChunk));
  }
  std::string out = std::to_string(groups.back());
  for (size_t i = groups.size() - 1; i-- > 0;) {
    std::string part = std::to_string(groups[i]);
    out += std::string(19 - part.size(), '0');
    out += part;
  }
  return out;
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace mhw
