#pragma once

// Elementary number-theoretic primitives shared by the rest of the
// library: binary weight, multiplicative orders of 2, deterministic
// 64-bit factorization, totient-style functions, Wieferich exponents
// and prime enumeration. Everything here is a pure function of its
// inputs and safe to call from any number of threads.

#include <cstdint>
#include <optional>
#include <vector>

#include "mhw/error.hpp"

namespace mhw {

// Number of ones in the binary expansion of n; hamming_weight(0) == 0.
int hamming_weight(uint64_t n) noexcept;

struct OddPart {
  uint64_t odd;  // m with n = m * 2^shift, m odd
  int shift;     // v2(n)
};

// Splits n >= 1 into odd * 2^shift. Throws std::invalid_argument for n == 0.
OddPart odd_part(uint64_t n);

// Returns p when n == 2^p - 1 for some p >= 1, otherwise empty.
std::optional<int> mersenne_exponent(uint64_t n);

struct OrderRecord {
  uint64_t n;      // odd modulus
  uint64_t order;  // smallest k >= 1 with 2^k == 1 (mod n); order(1) == 1
};

// Multiplicative order of 2 modulo odd n >= 1. Small n use iterated
// doubling; larger n factor phi(n) and strip prime factors. The two
// strategies agree everywhere (property-tested on the overlap).
OrderRecord mul_order2(uint64_t n);

struct PrimePower {
  uint64_t p;
  int e;
};

struct Factorization {
  uint64_t n;
  std::vector<PrimePower> factors;  // p strictly increasing, e >= 1
};

// Deterministic factorization of n >= 1 (trial division by primes up to
// 2^20, then Brent's rho with a fixed parameter schedule). n == 1 yields
// an empty factor list.
Factorization factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);
int mobius(uint64_t n);   // in {-1, 0, 1}
int omega(uint64_t n);    // number of distinct prime divisors
uint64_t dedekind_psi(uint64_t n);  // n * prod_{p|n} (1 + 1/p)

// Largest e with p^e | m (m >= 1, p prime; non-prime p rejected).
int v_p(uint64_t m, uint64_t p);

// Exact e_p with p^{e_p} || 2^{p-1} - 1, for an odd prime p. Works
// modulo p^{e+1} for increasing e; the giant number 2^{p-1} - 1 is never
// materialized. e_p >= 2 exactly for Wieferich primes (1093, 3511, ...).
int wieferich_exponent(uint64_t p);

// All primes <= limit, ascending, by segmented sieve. limit must be >= 2
// and at most kPrimesLimitCap (SizingError above the cap).
inline constexpr uint64_t kPrimesLimitCap = uint64_t{1} << 32;
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(uint64_t n) noexcept;

// (a * b) mod m and (base^exp) mod m without overflow, m >= 1.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) noexcept;
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept;

}  // namespace mhw
