#pragma once

// Named verification suites shared by the `verify` CLI subcommand and
// the acceptance harness.

#include <string>

#include "mhw/datastore.hpp"
#include "mhw/solver.hpp"

namespace mhw {

struct SuiteResult {
  std::string name;
  bool passed = true;
  int checks = 0;
  int failures = 0;
  std::string detail;  // first few failure descriptions
};

// Cache values 1..32 against the reference table.
SuiteResult verify_table1(const ValueCache& cache);

// Cache values 1..1000 against the reference data.
SuiteResult verify_matrix1000(const ValueCache& cache);

// For all coprime odd a, b <= 300: max(M(a), M(b)) <= M(ab) <= M(a)M(b),
// with equality to the max whenever the orders of 2 are coprime.
SuiteResult verify_lemmas(const SolverConfig& cfg = {});

// M(p^k) = M(p) for odd primes p <= 50, k <= 3, p^k <= 2^14.
SuiteResult verify_theorem2(const SolverConfig& cfg = {});

// Dispatcher vs direct BFS for every n <= 2^14.
SuiteResult verify_oracle(const SolverConfig& cfg = {});

}  // namespace mhw
