#include "mhw/verify.hpp"

#include <numeric>
#include <unordered_map>

#include "mhw/composition.hpp"
#include "mhw/core_arith.hpp"
#include "mhw/known_values.hpp"

namespace mhw {

namespace {

void record_failure(SuiteResult& result, const std::string& what) {
  result.passed = false;
  ++result.failures;
  if (result.failures <= 5) {
    result.detail += (result.detail.empty() ? "" : "; ") + what;
  }
}

SuiteResult check_against_known(const ValueCache& cache, int count, const std::string& name) {
  SuiteResult result;
  result.name = name;
  if (cache.covered_max() < static_cast<uint64_t>(count)) {
    result.passed = false;
    result.failures = 1;
    result.detail = "cache covers [1, " + std::to_string(cache.covered_max()) + "] but " +
                    std::to_string(count) + " values are needed";
    return result;
  }
  for (int n = 1; n <= count; ++n) {
    ++result.checks;
    if (cache.at(n) != kKnownFirst1000[n - 1]) {
      record_failure(result, "M(" + std::to_string(n) + ") = " + std::to_string(cache.at(n)) +
                                 ", expected " + std::to_string(kKnownFirst1000[n - 1]));
    }
  }
  return result;
}

}  // namespace

SuiteResult verify_table1(const ValueCache& cache) {
  return check_against_known(cache, kKnownTable1Count, "table1");
}

SuiteResult verify_matrix1000(const ValueCache& cache) {
  return check_against_known(cache, 1000, "matrix1000");
}

SuiteResult verify_lemmas(const SolverConfig& cfg) {
  SuiteResult result;
  result.name = "lemmas";
  constexpr uint64_t kLimit = 300;

  std::unordered_map<uint64_t, int> m_of;
  auto value = [&](uint64_t n) {
    auto it = m_of.find(n);
    return it != m_of.end() ? it->second : m_of[n] = min_weight(n, cfg);
  };
  std::unordered_map<uint64_t, uint64_t> order_of;
  auto order = [&](uint64_t n) {
    auto it = order_of.find(n);
    return it != order_of.end() ? it->second : order_of[n] = mul_order2(n).order;
  };

  for (uint64_t a = 1; a <= kLimit; a += 2) {
    for (uint64_t b = a; b <= kLimit; b += 2) {
      if (std::gcd(a, b) != 1) continue;
      int ma = value(a), mb = value(b), mab = value(a * b);
      int lower = std::max(ma, mb), upper = ma * mb;

      ++result.checks;
      if (mab < lower || mab > upper) {
        record_failure(result, "sandwich fails for (" + std::to_string(a) + ", " +
                                   std::to_string(b) + "): M = " + std::to_string(mab));
      }
      if (std::gcd(order(a), order(b)) == 1) {
        ++result.checks;
        if (mab != lower) {
          record_failure(result, "coprime-order equality fails for (" + std::to_string(a) + ", " +
                                     std::to_string(b) + "): M = " + std::to_string(mab) +
                                     ", max = " + std::to_string(lower));
        }
      }
    }
  }
  return result;
}

SuiteResult verify_theorem2(const SolverConfig& cfg) {
  SuiteResult result;
  result.name = "theorem2";
  constexpr uint64_t kMaxValue = uint64_t{1} << 14;
  for (uint64_t p : primes_up_to(50)) {
    if (p == 2) continue;
    int mp = min_weight(p, cfg);
    uint64_t power = p;
    for (int k = 2; k <= 3; ++k) {
      power *= p;
      if (power > kMaxValue) break;
      ++result.checks;
      int mpk = min_weight(power, cfg);
      if (mpk != mp) {
        record_failure(result, "M(" + std::to_string(p) + "^" + std::to_string(k) + ") = " +
                                   std::to_string(mpk) + " but M(" + std::to_string(p) + ") = " +
                                   std::to_string(mp));
      }
    }
  }
  return result;
}

SuiteResult verify_oracle(const SolverConfig& cfg) {
  SuiteResult result;
  result.name = "oracle";
  LeafMemo memo;
  for (uint64_t n = 1; n <= (uint64_t{1} << 14); ++n) {
    ++result.checks;
    int fast = fast_min_weight(n, cfg, &memo).m;
    int direct = min_weight(n, cfg);
    if (fast != direct) {
      record_failure(result, "n = " + std::to_string(n) + ": dispatcher " + std::to_string(fast) +
                                 " vs BFS " + std::to_string(direct));
    }
  }
  return result;
}

}  // namespace mhw
