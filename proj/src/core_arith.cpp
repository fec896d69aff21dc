#include "mhw/core_arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mhw {

namespace {

constexpr uint64_t kTrialDivisionBound = uint64_t{1} << 20;

// Primes up to 2^20 for trial division, built once on first use.
const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<uint32_t> out;
    const uint32_t limit = kTrialDivisionBound;
    std::vector<bool> composite(limit + 1, false);
    for (uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-based rho. The parameter schedule c = 1, 2, 3, ... is
// fixed so repeated runs factor identically.
uint64_t brent_rho(uint64_t n) {
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      // batch gcd over up to 128 steps
      uint64_t q = 1;
      uint64_t steps = std::min<uint64_t>(128, power - lam);
      uint64_t y0 = y;
      for (uint64_t i = 0; i < steps; ++i) {
        y = mul_mod(y, y, n);
        y = (y + c) % n;
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      lam += steps;
      d = std::gcd(q, n);
      if (d == n) {
        // backtrack one step at a time
        y = y0;
        d = 1;
        while (d == 1) {
          y = mul_mod(y, y, n);
          y = (y + c) % n;
          d = std::gcd(x > y ? x - y : y - x, n);
        }
        break;
      }
    }
    if (d != n && d != 1) return d;
  }
}

void factor_into(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
  uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite witnessed
}

}  // namespace

int hamming_weight(uint64_t n) noexcept { return std::popcount(n); }

OddPart odd_part(uint64_t n) {
  if (n == 0) throw std::invalid_argument("odd_part: n must be positive");
  int v = std::countr_zero(n);
  return {n >> v, v};
}

std::optional<int> mersenne_exponent(uint64_t n) {
  if (n == 0) return std::nullopt;
  if ((n & (n + 1)) != 0) return std::nullopt;  // n+1 not a power of two
  if (n == UINT64_MAX) return 64;
  return std::bit_width(n);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) noexcept {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept {
  if (m == 1) return 0;
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(uint64_t n) noexcept {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // Deterministic base set for the full 64-bit range.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f{n, {}};
  uint64_t m = n;
  for (uint32_t p : small_primes()) {
    if (uint64_t{p} * p > m) break;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.factors.push_back({p, e});
    }
  }
  if (m > 1) {
    if (is_prime(m)) {
      f.factors.push_back({m, 1});
    } else {
      std::vector<uint64_t> rest;
      factor_into(m, rest);
      std::sort(rest.begin(), rest.end());
      for (size_t i = 0; i < rest.size();) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        f.factors.push_back({rest[i], static_cast<int>(j - i)});
        i = j;
      }
    }
  }
  return f;
}

uint64_t euler_phi(uint64_t n) {
  Factorization f = factorize(n);
  uint64_t phi = n;
  for (const auto& [p, e] : f.factors) {
    phi -= phi / p;
  }
  return phi;
}

int mobius(uint64_t n) {
  Factorization f = factorize(n);
  for (const auto& [p, e] : f.factors) {
    if (e > 1) return 0;
  }
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

int omega(uint64_t n) { return static_cast<int>(factorize(n).factors.size()); }

uint64_t dedekind_psi(uint64_t n) {
  Factorization f = factorize(n);
  uint64_t psi = n;
  for (const auto& [p, e] : f.factors) {
    psi = psi / p * (p + 1);
  }
  return psi;
}

int v_p(uint64_t m, uint64_t p) {
  if (m == 0) throw std::invalid_argument("v_p: m must be positive");
  if (!is_prime(p)) throw std::invalid_argument("v_p: p must be prime");
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

OrderRecord mul_order2(uint64_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("mul_order2: n must be odd and positive");
  if (n == 1) return {1, 1};
  if (n < (uint64_t{1} << 16)) {
    // Iterated doubling: order <= n - 1 steps, cache-friendly.
    uint64_t w = 2 % n;
    uint64_t k = 1;
    while (w != 1) {
      w <<= 1;
      if (w >= n) w -= n;
      ++k;
    }
    return {n, k};
  }
  // order | phi(n): start from phi and strip prime factors while
  // 2^(t/q) stays congruent to 1.
  uint64_t t = euler_phi(n);
  Factorization tf = factorize(t);
  for (const auto& [q, e] : tf.factors) {
    for (int i = 0; i < e; ++i) {
      if (t % q == 0 && pow_mod(2, t / q, n) == 1) {
        t /= q;
      } else {
        break;
      }
    }
  }
  return {n, t};
}

int wieferich_exponent(uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("wieferich_exponent: p must be an odd prime");
  }
  int e = 1;
  uint64_t modulus = p * p;  // p^{e+1}
  if (p > UINT64_MAX / p) return e;  // p^2 overflows: e_p == 1 is all we can certify
  while (true) {
    if (pow_mod(2, p - 1, modulus) != 1) return e;
    ++e;
    if (modulus > UINT64_MAX / p) {
      throw SizingError("wieferich_exponent: p^" + std::to_string(e + 1) +
                        " exceeds the 64-bit working range");
    }
    modulus *= p;
  }
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("primes_up_to: limit must be >= 2");
  if (limit > kPrimesLimitCap) {
    throw SizingError("primes_up_to: limit " + std::to_string(limit) + " exceeds cap " +
                      std::to_string(kPrimesLimitCap));
  }
  std::vector<uint64_t> primes;
  uint64_t sqrt_limit = 1;
  while ((sqrt_limit + 1) * (sqrt_limit + 1) <= limit) ++sqrt_limit;

  // base sieve up to sqrt(limit)
  std::vector<bool> base_composite(sqrt_limit + 1, false);
  std::vector<uint64_t> base_primes;
  for (uint64_t i = 2; i <= sqrt_limit; ++i) {
    if (base_composite[i]) continue;
    base_primes.push_back(i);
    for (uint64_t j = i * i; j <= sqrt_limit; j += i) base_composite[j] = true;
  }

  constexpr uint64_t kSegment = uint64_t{1} << 18;
  std::vector<char> sieve(kSegment);
  for (uint64_t low = 2; low <= limit; low += kSegment) {
    uint64_t high = std::min(low + kSegment - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (uint64_t p : base_primes) {
      if (p * p > high) break;
      uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (uint64_t i = low; i <= high; ++i) {
      if (sieve[i - low]) primes.push_back(i);
    }
  }
  return primes;
}

}  // namespace mhw
