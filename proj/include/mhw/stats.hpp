#pragma once

// Exact-rational statistics over the computed M values: dyadic block
// averages C_av / CO_av and their telescoping identities, running
// averages, prime classes P_k with the even-order characterization of
// P_2, the Hasse density comparison, and sturdy numbers.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mhw/datastore.hpp"
#include "mhw/rational.hpp"
#include "mhw/solver.hpp"

namespace mhw {

struct DyadicStats {
  int max_block = 0;                     // J
  std::vector<int64_t> block_sums;       // [j] = sum of M over [2^{j-1}, 2^j - 1]
  std::vector<int64_t> odd_block_sums;   // same, odd k only

  // Mean of M over the dyadic block [2^{j-1}, 2^j - 1].
  ExactRatio c_av(int j) const;
  // Mean of M over the odd members of that block. The normalization is
  // the odd-member count 2^{j-2} (1 for j = 1), which is what makes the
  // recursion c_av(j) = c_av(j-1)/2 + co_av(j)/2 an exact identity.
  ExactRatio co_av(int j) const;
  // Running average M_av(2^J), using M(2^J) = 1 for the endpoint.
  ExactRatio m_av_at_pow() const;
};

// Exact block sums for j = 1..J; the cache must cover [1, 2^J - 1].
DyadicStats dyadic_stats(int max_block, const ValueCache& cache);

// M_av(x) = (sum of M(k) for k <= x) / x, exact.
ExactRatio running_average(uint64_t x, const ValueCache& cache);

struct TelescopingReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;
};

// Verifies, in exact arithmetic for every j <= J: the CO_av recursion,
// the weighted-numerator telescoping identity, and the odd-sum identity
// (each dyadic block sum equals the sum of M over all odd k below the
// block's end). Any failure signals solver or cache corruption.
TelescopingReport telescoping_check(int max_block, const DyadicStats& stats);

struct PrimeClassRecord {
  uint64_t p;
  int mp;          // M(p)
  uint64_t order;  // l2(p); 0 for p = 2
  bool order_even;
};

// Records for every prime <= limit; M via the solver, order parity via
// mul_order2. Parallel over primes, deterministic output.
std::vector<PrimeClassRecord> classify_primes(uint64_t limit, unsigned threads = 0,
                                              const SolverConfig& cfg = {});

// Members of P_k = { p prime : M(p) = k } drawn from the records.
std::vector<uint64_t> prime_class(std::span<const PrimeClassRecord> records, int k);

struct HasseEstimate {
  uint64_t odd_primes = 0;
  uint64_t even_order = 0;
  double fraction() const { return static_cast<double>(even_order) / static_cast<double>(odd_primes); }
};

inline const ExactRatio kHasseDensity{17, 24};

// Fraction of odd primes <= limit whose order of 2 is even (the density
// of primes with M(p) = 2 tends to 17/24).
HasseEstimate hasse_fraction(uint64_t limit, unsigned threads = 0);

// n is sturdy when no multiple beats n's own weight: M(n) = s2(n).
bool is_sturdy(uint64_t n, const SolverConfig& cfg = {});

// (2^(s*k) - 1) / (2^s - 1): a sturdy family; returns the value after
// checking sturdiness through the solver.
uint64_t sturdy_family(int s, int k, const SolverConfig& cfg = {});

// CSV emitters (header row + one record per line).
void write_cav_csv(std::ostream& out, const DyadicStats& stats);
void write_prime_class_csv(std::ostream& out, std::span<const PrimeClassRecord> records);
void write_sturdy_csv(std::ostream& out, std::span<const uint64_t> values, const ValueCache& cache);

}  // namespace mhw
