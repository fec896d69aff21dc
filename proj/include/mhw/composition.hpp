#pragma once

// Reductions that bound or exactly determine M(n) from a factorization:
// the product inequality max{M(a),M(b)} <= M(ab) <= M(a)M(b), the exact
// max rule for odd coprime a, b whose orders of 2 are coprime, and the
// prime-power collapse M(p^k) = M(p^min(k, e_p)). fast_min_weight wires
// them into a dispatcher with BFS fallback; the inequality is only ever
// recorded as a diagnostic, never returned as the answer.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mhw/solver.hpp"

namespace mhw {

struct ProductBounds {
  int lower;  // max(M(a), M(b))
  int upper;  // M(a) * M(b)
};

// Certified bounds for M(ab) from M(a) and M(b).
ProductBounds product_upper_bound(uint64_t a, uint64_t b, const SolverConfig& cfg = {});

// Exactly M(ab) = max(M(a), M(b)) when a, b are odd, coprime, and the
// orders of 2 modulo a and b are coprime; empty when the hypotheses do
// not hold (no claim is made then).
std::optional<int> coprime_order_exact(uint64_t a, uint64_t b, const SolverConfig& cfg = {});

// Smallest k' with M(p^k) = M(p^k'): min(k, e_p) for an odd prime p.
int prime_power_reduce(uint64_t p, int k);

enum class StepKind {
  EvenStrip,
  MersenneShortcut,
  PrimePowerCollapse,
  CoprimeOrderSplit,
  ProductBound,
  BfsFallback,
};

struct ReductionStep {
  StepKind kind;
  uint64_t a = 0;  // meaning depends on kind; see renderers
  uint64_t b = 0;
  int k_from = 0;  // PrimePowerCollapse: original and reduced exponent
  int k_to = 0;
  int value = 0;  // M value, Mersenne exponent, or diagnostic bound
};

// Auditable record of which reduction produced the result. Replaying the
// steps recomputes the result from the recorded leaf values alone.
struct ReductionTrace {
  uint64_t n = 0;
  int result = 0;
  std::vector<ReductionStep> steps;

  std::string to_text() const;
  std::vector<std::string> to_lines() const;
  int replay() const;
};

struct FastResult {
  int m;
  ReductionTrace trace;
};

// Optional cache of leaf M values; factors repeat heavily across a sweep,
// so each leaf BFS then runs only once per worker.
using LeafMemo = std::unordered_map<uint64_t, int>;

// M(n) via the reduction dispatcher. Exact for every n; the BFS runs only
// on whatever residual the lemmas leave behind.
FastResult fast_min_weight(uint64_t n, const SolverConfig& cfg = {});
FastResult fast_min_weight(uint64_t n, const SolverConfig& cfg, LeafMemo* memo);

}  // namespace mhw
