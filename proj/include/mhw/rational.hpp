#pragma once

// Exact ratio of 64-bit integers, always in lowest terms with a positive
// denominator. The statistics pipeline does every identity check in this
// type; floating point only appears at the presentation layer.

#include <cstdint>
#include <string>

namespace mhw {

struct ExactRatio {
  int64_t num = 0;
  int64_t den = 1;

  ExactRatio() = default;
  ExactRatio(int64_t n, int64_t d);  // normalizes; d == 0 rejected

  ExactRatio operator+(const ExactRatio& o) const;
  ExactRatio operator-(const ExactRatio& o) const;
  ExactRatio operator*(const ExactRatio& o) const;

  bool operator==(const ExactRatio&) const = default;
  bool operator<(const ExactRatio& o) const;
  bool operator<=(const ExactRatio& o) const { return *this == o || *this < o; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // "num/den", or just "num" when den == 1.
  std::string to_fraction() const;

  // Decimal rendering with the given number of significant digits
  // (round half up), trailing zeros trimmed: 35/16 -> "2.1875",
  // 410497/131072 -> "3.13184".
  std::string to_decimal(int significant = 6) const;
};

}  // namespace mhw
