#include "mhw/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mhw/core_arith.hpp"

namespace mhw {

namespace {

constexpr uint32_t kRoot = UINT32_MAX;  // predecessor marker for level-1 residues

inline void set_bit(std::vector<uint64_t>& bits, uint64_t i) {
  bits[i >> 6] |= uint64_t{1} << (i & 63);
}

inline bool test_bit(const std::vector<uint64_t>& bits, uint64_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}

void check_solver_bound(uint64_t m, const SolverConfig& cfg) {
  if (m > cfg.max_residues) {
    throw SizingError("solver: odd part " + std::to_string(m) + " exceeds the residue bound " +
                      std::to_string(cfg.max_residues) +
                      " (raise SolverConfig::max_residues to allow this)");
  }
}

}  // namespace

PowerSubgroup::PowerSubgroup(uint64_t modulus) : n_(modulus) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw std::invalid_argument("PowerSubgroup: modulus must be odd and >= 3");
  }
  if (modulus >= (uint64_t{1} << 32)) {
    throw SizingError("PowerSubgroup: modulus does not fit the 32-bit residue layout");
  }
  bits_.assign((modulus + 63) / 64, 0);
  uint64_t w = 1;
  do {
    elements_.push_back(static_cast<uint32_t>(w));
    set_bit(bits_, w);
    w <<= 1;
    if (w >= modulus) w -= modulus;
  } while (w != 1);
}

LevelState initial_state(const PowerSubgroup& a) {
  LevelState state;
  state.reached.assign((a.modulus() + 63) / 64, 0);
  for (uint32_t e : a.elements()) set_bit(state.reached, e);
  state.frontier = a.elements();
  state.level = 1;
  return state;
}

bool expand_level(LevelState& state, const PowerSubgroup& a, uint64_t target) {
  const uint64_t n = a.modulus();
  const bool has_target = target < n;

  if (has_target) {
    for (uint32_t b : state.frontier) {
      uint64_t t = target >= b ? target - b : target + n - b;
      if (a.contains(t)) return true;
    }
  }

  std::vector<uint32_t> next;
  for (uint32_t b : state.frontier) {
    for (uint32_t e : a.elements()) {
      uint64_t u = uint64_t{b} + e;
      if (u >= n) u -= n;
      if (!test_bit(state.reached, u)) {
        set_bit(state.reached, u);
        next.push_back(static_cast<uint32_t>(u));
      }
    }
  }
  state.frontier = std::move(next);
  ++state.level;
  return false;
}

// Every level set is closed under doubling mod m: doubling a sum of r
// powers of 2 yields another sum of r powers. The BFS therefore runs on
// one representative per <2>-orbit, marks whole orbits at once, and
// tests the target against the orbit closure of { -1 - 2^i }. Total cost
// is O(m + l2(m)) instead of quadratic frontier expansion.
int MinWeightSolver::solve(uint64_t n, const SolverConfig& cfg) {
  if (n == 0) throw std::invalid_argument("min_weight: n must be positive");
  const uint64_t m = odd_part(n).odd;
  if (m == 1) return 1;
  if (auto p = mersenne_exponent(m)) return *p;
  check_solver_bound(m, cfg);

  const uint64_t target = m - 1;
  const size_t words = (m + 63) / 64;

  in_a_.assign(words, 0);
  subgroup_.clear();
  uint64_t w = 1;
  do {
    subgroup_.push_back(static_cast<uint32_t>(w));
    in_a_[w >> 6] |= uint64_t{1} << (w & 63);
    if (w == target) return 2;  // n-1 is itself a power of 2 mod m
    w <<= 1;
    if (w >= m) w -= m;
  } while (w != 1);

  // Two subgroup terms: -1 = 2^i + 2^j for some i, j?
  for (uint32_t a : subgroup_) {
    uint64_t t = target - a;  // target >= 1 > 0 and a <= m - 2 here
    if (test_bit(in_a_, t)) return 3;
  }

  // Orbit closure of the target's one-step preimages -1 - 2^i.
  t_set_.assign(words, 0);
  for (uint32_t a : subgroup_) {
    uint64_t s = target - a;
    if (!test_bit(t_set_, s)) {
      uint64_t v = s;
      do {
        set_bit(t_set_, v);
        v <<= 1;
        if (v >= m) v -= m;
      } while (v != s);
    }
  }

  reached_ = in_a_;
  reps_.clear();
  reps_.push_back(1);
  uint64_t level = 1;

  while (true) {
    for (uint32_t rep : reps_) {
      if (test_bit(t_set_, rep)) return static_cast<int>(level) + 2;
    }

    next_reps_.clear();
    for (uint32_t rep : reps_) {
      for (uint32_t a : subgroup_) {
        uint64_t u = uint64_t{rep} + a;
        if (u >= m) u -= m;
        if (!test_bit(reached_, u)) {
          next_reps_.push_back(static_cast<uint32_t>(u));
          uint64_t v = u;
          do {
            set_bit(reached_, v);
            v <<= 1;
            if (v >= m) v -= m;
          } while (v != u);
        }
      }
    }
    ++level;
    if (level > m || next_reps_.empty()) {
      throw std::logic_error("min_weight: BFS exhausted residues without reaching n-1");
    }
    std::swap(reps_, next_reps_);
  }
}

int min_weight(uint64_t n, const SolverConfig& cfg) {
  thread_local MinWeightSolver solver;
  return solver.solve(n, cfg);
}

Witness min_weight_with_witness(uint64_t n, const SolverConfig& cfg) {
  if (n == 0) throw std::invalid_argument("min_weight_with_witness: n must be positive");
  const auto [m, shift] = odd_part(n);
  const uint64_t v = static_cast<uint64_t>(shift);

  Witness witness;
  witness.n = n;

  if (m == 1) {
    witness.exponents = {v};
    witness.multiplier = BigNat(1);
    return witness;
  }
  if (auto p = mersenne_exponent(m)) {
    for (int i = 0; i < *p; ++i) witness.exponents.push_back(v + i);
    witness.multiplier = BigNat(1);
    return witness;
  }
  check_solver_bound(m, cfg);

  const uint64_t target = m - 1;
  PowerSubgroup a(m);
  const auto& elems = a.elements();
  const uint64_t order = a.order();

  // Subgroup indices of the terms summing to target, innermost level last.
  std::vector<uint32_t> chain;

  // Level 1: target may already be a power of 2 mod m.
  for (uint32_t i = 0; i < order && chain.empty(); ++i) {
    if (elems[i] == target) chain.push_back(i);
  }

  if (chain.empty()) {
    std::vector<uint64_t> reached((m + 63) / 64, 0);
    std::vector<uint32_t> pred_res(m, 0), pred_idx(m, 0);
    std::vector<uint32_t> frontier;
    frontier.reserve(order);
    for (uint32_t i = 0; i < order; ++i) {
      set_bit(reached, elems[i]);
      pred_res[elems[i]] = kRoot;
      pred_idx[elems[i]] = i;
      frontier.push_back(elems[i]);
    }

    std::vector<uint32_t> next;
    uint64_t level = 1;
    bool found = false;
    uint32_t final_idx = 0, final_b = 0;
    while (!found) {
      next.clear();
      // Lowest subgroup index wins ties: scan elements in index order and
      // record only the first reach of each residue.
      for (uint32_t i = 0; i < order && !found; ++i) {
        const uint64_t e = elems[i];
        for (uint32_t b : frontier) {
          uint64_t u = e + b;
          if (u >= m) u -= m;
          if (u == target) {
            final_idx = i;
            final_b = b;
            found = true;
            break;
          }
          if (!test_bit(reached, u)) {
            set_bit(reached, u);
            pred_res[u] = b;
            pred_idx[u] = i;
            next.push_back(static_cast<uint32_t>(u));
          }
        }
      }
      if (found) break;
      ++level;
      if (level > m || next.empty()) {
        throw std::logic_error("witness BFS exhausted residues without reaching n-1");
      }
      std::swap(frontier, next);
    }

    chain.push_back(final_idx);
    uint32_t cur = final_b;
    while (true) {
      chain.push_back(pred_idx[cur]);
      if (pred_res[cur] == kRoot) break;
      cur = pred_res[cur];
    }
  }

  std::reverse(chain.begin(), chain.end());  // level order e_1 .. e_{w-1}

  // Fixed 2^0 term first, then e_j + j*order keeps the exponents strictly
  // increasing while preserving every term's residue class.
  witness.exponents.push_back(v);
  for (size_t j = 0; j < chain.size(); ++j) {
    witness.exponents.push_back(v + chain[j] + (j + 1) * order);
  }

  uint64_t residue_sum = 1;
  for (uint32_t e : chain) residue_sum = (residue_sum + elems[e]) % m;
  if (residue_sum != 0) throw std::logic_error("witness: residue classes do not sum to 0");

  BigNat k = BigNat::sum_of_bits(witness.exponents);
  uint64_t rem = k.div_u64(n);
  if (rem != 0) throw std::logic_error("witness: power sum is not divisible by n");
  witness.multiplier = std::move(k);
  return witness;
}

}  // namespace mhw
