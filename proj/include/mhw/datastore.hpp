#pragma once

// Persistent, resumable cache of M values covering a contiguous prefix
// [1, N]. The on-disk format is plain text: a `#mhw v1 max=N` header,
// then one `n,m` line per n in ascending order. An export mode writes
// the OEIS b-file layout (`n m`) for diffing against A086342.

#include <cstdint>
#include <string>
#include <vector>

#include "mhw/solver.hpp"

namespace mhw {

class ValueCache {
 public:
  ValueCache() = default;

  uint64_t covered_max() const noexcept {
    return values_.empty() ? 0 : values_.size() - 1;
  }
  bool covers(uint64_t n) const noexcept { return n >= 1 && n <= covered_max(); }

  int at(uint64_t n) const;  // M(n); throws std::out_of_range outside the prefix

  void ensure_size(uint64_t max_n);
  void set(uint64_t n, int m);

  // Direct slot access for sweep workers writing disjoint chunks.
  uint8_t* data() noexcept { return values_.data(); }

  bool operator==(const ValueCache&) const = default;

 private:
  std::vector<uint8_t> values_;  // index n; slot 0 unused
};

inline constexpr const char* kCacheHeaderPrefix = "#mhw v1 max=";
inline constexpr uint64_t kSweepChunk = 4096;

// Extends the cache to cover [1, hi]. lo must not leave a gap past the
// existing prefix; already-covered values are kept as-is (idempotent).
// Odd values are computed with the reduction dispatcher in parallel
// chunks; even slots are filled from their odd part afterwards, so the
// output is identical for any thread count.
ValueCache sweep(const ValueCache& base, uint64_t lo, uint64_t hi, unsigned threads = 0,
                 const SolverConfig& cfg = {});

void save(const ValueCache& cache, const std::string& path);
ValueCache load(const std::string& path);

// Union of two prefixes; values must agree where both are covered.
ValueCache merge(const ValueCache& a, const ValueCache& b);

void export_bfile(const ValueCache& cache, const std::string& path);

}  // namespace mhw
