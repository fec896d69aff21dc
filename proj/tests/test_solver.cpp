#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cstdint>
#include <set>

#include "mhw/core_arith.hpp"
#include "mhw/known_values.hpp"
#include "mhw/solver.hpp"

using namespace mhw;

namespace {

// Brute-force oracle: the set of residues expressible as a sum of at
// most `terms` subgroup elements (repetition allowed), via plain set DP.
std::set<uint64_t> sums_up_to(const PowerSubgroup& a, int terms) {
  std::set<uint64_t> current(a.elements().begin(), a.elements().end());
  std::set<uint64_t> all = current;
  for (int t = 2; t <= terms; ++t) {
    std::set<uint64_t> next;
    for (uint64_t s : current) {
      for (uint64_t e : a.elements()) {
        next.insert((s + e) % a.modulus());
      }
    }
    current = next;
    all.insert(next.begin(), next.end());
  }
  return all;
}

void check_witness(uint64_t n) {
  Witness w = min_weight_with_witness(n);
  CAPTURE(n);
  CHECK(w.n == n);
  CHECK(static_cast<int>(w.exponents.size()) == min_weight(n));
  for (size_t i = 1; i < w.exponents.size(); ++i) {
    CHECK(w.exponents[i - 1] < w.exponents[i]);
  }
  BigNat sum = BigNat::sum_of_bits(w.exponents);
  CHECK(sum.mod_u64(n) == 0);
  // k * n reproduces the sum: divide out and compare the remainder.
  BigNat quotient = sum;
  CHECK(quotient.div_u64(n) == 0);
  CHECK(quotient == w.multiplier);
}

}  // namespace

TEST_CASE("PowerSubgroup structure") {
  PowerSubgroup a(7);
  CHECK(a.order() == 3);
  CHECK(a.elements() == std::vector<uint32_t>{1, 2, 4});
  CHECK(a.contains(4));
  CHECK(!a.contains(6));

  // elements[0] = 1 and the doubling recurrence, plus closure under
  // multiplication (it is a group).
  for (uint64_t n : {9ull, 15ull, 21ull, 2023ull}) {
    PowerSubgroup g(n);
    CHECK(g.elements()[0] == 1);
    for (size_t i = 0; i < g.order(); ++i) {
      uint64_t next = (2 * uint64_t{g.elements()[i]}) % n;
      CHECK(g.elements()[(i + 1) % g.order()] == next);
      for (size_t j = 0; j < g.order(); ++j) {
        CHECK(g.contains(g.elements()[i] * uint64_t{g.elements()[j]} % n));
      }
    }
    std::set<uint32_t> distinct(g.elements().begin(), g.elements().end());
    CHECK(distinct.size() == g.order());
  }

  CHECK_THROWS_AS(PowerSubgroup(8), std::invalid_argument);
  CHECK_THROWS_AS(PowerSubgroup(1), std::invalid_argument);
  CHECK_THROWS_AS(PowerSubgroup((uint64_t{1} << 32) + 1), SizingError);
}

TEST_CASE("min_weight matches the first-32 table") {
  for (int n = 1; n <= 32; ++n) {
    CAPTURE(n);
    CHECK(min_weight(n) == kKnownFirst1000[n - 1]);
  }
}

TEST_CASE("min_weight matches all 1000 reference values") {
  for (int n = 1; n <= 1000; ++n) {
    CAPTURE(n);
    CHECK(min_weight(n) == kKnownFirst1000[n - 1]);
  }
}

TEST_CASE("min_weight landmark values") {
  CHECK(min_weight(2023) == 3);
  CHECK(min_weight(126) == 6);
  CHECK(min_weight(127) == 7);
  CHECK(min_weight(128) == 1);
  CHECK(min_weight(511) == 9);
  CHECK(min_weight(512) == 1);
}

TEST_CASE("min_weight argument and sizing errors") {
  CHECK_THROWS_AS(min_weight(0), std::invalid_argument);
  SolverConfig tiny{.max_residues = 100};
  CHECK_THROWS_AS(min_weight(101, tiny), SizingError);
  CHECK(min_weight(2 * 51, tiny) == min_weight(51, tiny));  // odd part within bound
  CHECK(min_weight(1 << 20, tiny) == 1);                    // power of two never allocates
}

TEST_CASE("even halving and weight bounds up to 2^14") {
  for (uint64_t n = 1; n <= (uint64_t{1} << 14); ++n) {
    int m = min_weight(n);
    if (n % 2 == 0) CHECK(m == min_weight(n / 2));
    CHECK(m <= hamming_weight(n));
    CHECK(m <= std::bit_width(n));  // M(n) <= 1 + log2(n)
  }
  for (int k = 1; k <= 14; ++k) {
    CHECK(min_weight((uint64_t{1} << k) - 1) == k);  // sharp infinitely often
  }
}

TEST_CASE("odd n has M(n) = 1 exactly for n = 1") {
  CHECK(min_weight(1) == 1);
  for (uint64_t n = 3; n <= 10001; n += 2) {
    CAPTURE(n);
    CHECK(min_weight(n) >= 2);
  }
}

TEST_CASE("expand_level finds the target exactly when it is a new sum") {
  // n = 7: A = {1, 2, 4}; 6 is not in A but is a two-term sum (2 + 4).
  PowerSubgroup a(7);
  LevelState state = initial_state(a);
  CHECK(state.level == 1);
  CHECK(!a.contains(6));
  CHECK(expand_level(state, a, 6));
  CHECK(state.level == 1);  // halted immediately, state untouched

  // n = 5: 4 is already in A; the caller handles the level-1 hit.
  PowerSubgroup b(5);
  CHECK(b.contains(4));
  CHECK(min_weight(5) == 2);
}

TEST_CASE("level completeness against the set-DP oracle") {
  for (uint64_t n = 3; n <= 199; n += 2) {
    if (mersenne_exponent(n)) continue;  // solver shortcuts these anyway
    PowerSubgroup a(n);
    LevelState state = initial_state(a);
    for (int r = 1; r <= 4; ++r) {
      // no-target expansion: pass the modulus itself
      bool found = expand_level(state, a, n);
      CHECK(!found);
      std::set<uint64_t> oracle = sums_up_to(a, r + 1);
      CHECK(state.level == static_cast<uint64_t>(r + 1));
      size_t reached_count = 0;
      for (uint64_t v = 0; v < n; ++v) {
        bool in_oracle = oracle.count(v) > 0;
        CHECK(state.is_reached(v) == in_oracle);
        reached_count += state.is_reached(v);
      }
      CHECK(reached_count == oracle.size());
    }
  }
}

TEST_CASE("min_weight agrees with the level oracle for small odd n") {
  // Independent recomputation of M(n) from the set DP: 1 + least r with
  // n-1 expressible as a sum of r subgroup terms.
  for (uint64_t n = 3; n <= 199; n += 2) {
    if (mersenne_exponent(n)) continue;
    PowerSubgroup a(n);
    int r = 1;
    while (sums_up_to(a, r).count(n - 1) == 0) ++r;
    CAPTURE(n);
    CHECK(min_weight(n) == 1 + r);
  }
}

TEST_CASE("witnesses verify and are minimal") {
  for (uint64_t n = 1; n <= 4096; ++n) check_witness(n);
  for (uint64_t n : {uint64_t{12345}, uint64_t{1} << 13, uint64_t{3} << 13, uint64_t{65535},
                     uint64_t{65537}}) {
    check_witness(n);
  }
}

TEST_CASE("witness for n = 1 and powers of two") {
  Witness one = min_weight_with_witness(1);
  CHECK(one.exponents == std::vector<uint64_t>{0});
  CHECK(one.multiplier == BigNat(1));

  Witness pow = min_weight_with_witness(uint64_t{1} << 18);
  CHECK(pow.exponents == std::vector<uint64_t>{18});
  CHECK(pow.multiplier == BigNat(1));
}

TEST_CASE("witness for 2023 and the classic weight-3 multiple") {
  Witness w = min_weight_with_witness(2023);
  CHECK(w.exponents.size() == 3);
  check_witness(2023);
  // 2^277 + 2^8 + 1 is divisible by 2023.
  uint64_t r = (pow_mod(2, 277, 2023) + pow_mod(2, 8, 2023) + 1) % 2023;
  CHECK(r == 0);
}

TEST_CASE("witness for 3511^2 realizes the {0, 585, 1170} class pattern") {
  const uint64_t p = 3511;
  const uint64_t n = p * p;
  // The specific multiset is realizable:
  CHECK((1 + pow_mod(2, 585, n) + pow_mod(2, 1170, n)) % n == 0);

  Witness w = min_weight_with_witness(n);
  REQUIRE(w.exponents.size() == 3);
  const uint64_t order = mul_order2(n).order;
  CHECK(order == 1755);
  // The witness realizes M(p^2) = 3 through some class triple; its
  // residue classes must sum to 0 mod p^2 just like {0, 585, 1170}.
  uint64_t class_sum = 0;
  for (uint64_t e : w.exponents) class_sum = (class_sum + pow_mod(2, e % order, n)) % n;
  CHECK(class_sum == 0);
  BigNat sum = BigNat::sum_of_bits(w.exponents);
  CHECK(sum.mod_u64(n) == 0);
}

TEST_CASE("BigNat decimal and division") {
  CHECK(BigNat(0).to_decimal() == "0");
  CHECK(BigNat(123456789).to_decimal() == "123456789");
  BigNat big;
  big.set_bit(100);  // 2^100
  CHECK(big.to_decimal() == "1267650600228229401496703205376");
  uint64_t rem = big.div_u64(3);
  CHECK(rem == 1);  // 2^100 = 3k + 1
  CHECK(big.to_decimal() == "422550200076076467165567735125");
}
