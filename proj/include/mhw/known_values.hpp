#pragma once

// Reference data the verification suites check against: the first 1000
// terms of OEIS A086342 (n -> minimal Hamming weight of a multiple of n)
// and the 18 exact dyadic block averages derived from the full dataset.

#include <cstdint>

namespace mhw {

extern const int kKnownFirst1000[1000];  // index i holds M(i + 1)

inline constexpr int kKnownTable1Count = 32;  // the classic first-32 table

struct KnownFraction {
  int64_t num;
  int64_t den;
};

extern const KnownFraction kKnownCav[18];  // C_av(j), j = 1..18

}  // namespace mhw
