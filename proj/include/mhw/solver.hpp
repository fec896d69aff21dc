#pragma once

// Breadth-first search engine for M(n), the minimal Hamming weight over
// all multiples of n. Working over the odd part m of n, the alphabet is
// the cyclic subgroup A = <2> of (Z/mZ)*; M(m) equals 1 plus the least
// number of subgroup elements (with repetition) summing to m - 1, the
// trailing +1 being the fixed 2^0 term. The frontier expansion mirrors
// that: level r holds every residue writable as a sum of exactly r
// subgroup terms and not fewer.

#include <cstdint>
#include <vector>

#include "mhw/bignum.hpp"
#include "mhw/error.hpp"

namespace mhw {

struct SolverConfig {
  // Largest odd modulus the BFS will allocate dense state for.
  uint64_t max_residues = uint64_t{1} << 26;
};

// The subgroup generated by 2 modulo an odd n >= 3: elements[i] = 2^i mod n.
class PowerSubgroup {
 public:
  explicit PowerSubgroup(uint64_t modulus);

  uint64_t modulus() const noexcept { return n_; }
  uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<uint32_t>& elements() const noexcept { return elements_; }
  bool contains(uint64_t residue) const noexcept {
    return (bits_[residue >> 6] >> (residue & 63)) & 1;
  }

 private:
  uint64_t n_;
  std::vector<uint32_t> elements_;
  std::vector<uint64_t> bits_;  // membership bitset over residues
};

// BFS state after `level` rounds: `reached` marks every residue that is a
// sum of at most `level` subgroup terms, `frontier` those first reached
// at exactly `level`.
struct LevelState {
  std::vector<uint64_t> reached;  // bitset over residues 0..n-1
  std::vector<uint32_t> frontier;
  uint64_t level = 0;

  bool is_reached(uint64_t residue) const noexcept {
    return (reached[residue >> 6] >> (residue & 63)) & 1;
  }
};

LevelState initial_state(const PowerSubgroup& a);

// One frontier expansion. Returns true as soon as `target` shows up among
// the level+1 sums, in which case the state is left untouched (the search
// halts immediately); otherwise advances the state one level and returns
// false.
bool expand_level(LevelState& state, const PowerSubgroup& a, uint64_t target);

// M(n) for n >= 1. Throws SizingError when the odd part of n exceeds
// cfg.max_residues. Reuses thread-local scratch buffers across calls.
int min_weight(uint64_t n, const SolverConfig& cfg = {});

// An explicit minimal-weight multiple: sum of 2^exponents[i] equals
// multiplier * n, with exponents strictly increasing and
// exponents.size() == M(n).
struct Witness {
  uint64_t n = 0;
  std::vector<uint64_t> exponents;
  BigNat multiplier;
};

Witness min_weight_with_witness(uint64_t n, const SolverConfig& cfg = {});

// Reusable-buffer variant of min_weight for tight sweep loops; one
// instance per thread, not shareable mid-computation.
class MinWeightSolver {
 public:
  int solve(uint64_t n, const SolverConfig& cfg = {});

 private:
  std::vector<uint32_t> subgroup_;
  std::vector<uint64_t> in_a_;
  std::vector<uint64_t> t_set_;
  std::vector<uint64_t> reached_;
  std::vector<uint32_t> reps_;
  std::vector<uint32_t> next_reps_;
};

}  // namespace mhw
