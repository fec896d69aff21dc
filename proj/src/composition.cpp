#include "mhw/composition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mhw/core_arith.hpp"

namespace mhw {

namespace {

uint64_t pow_u64(uint64_t p, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

struct Part {
  uint64_t q;        // p^k as it divides n
  uint64_t reduced;  // p^k' with the same M value
  uint64_t order;    // l2(q), the true order of 2 modulo q
  int m;             // M(q)
};

// Computes M of a leaf value via the solver and records how.
int leaf_value(uint64_t value, const SolverConfig& cfg, std::vector<ReductionStep>& steps,
               LeafMemo* memo) {
  if (auto p = mersenne_exponent(value); p && value > 1) {
    steps.push_back({StepKind::MersenneShortcut, value, 0, 0, 0, *p});
    return *p;
  }
  int m;
  if (memo) {
    auto it = memo->find(value);
    m = it != memo->end() ? it->second : (*memo)[value] = min_weight(value, cfg);
  } else {
    m = min_weight(value, cfg);
  }
  steps.push_back({StepKind::BfsFallback, value, 0, 0, 0, m});
  return m;
}

}  // namespace

ProductBounds product_upper_bound(uint64_t a, uint64_t b, const SolverConfig& cfg) {
  if (a == 0 || b == 0) throw std::invalid_argument("product_upper_bound: a, b must be positive");
  int ma = min_weight(a, cfg);
  int mb = min_weight(b, cfg);
  return {std::max(ma, mb), ma * mb};
}

std::optional<int> coprime_order_exact(uint64_t a, uint64_t b, const SolverConfig& cfg) {
  if (a == 0 || b == 0 || a % 2 == 0 || b % 2 == 0) {
    throw std::invalid_argument("coprime_order_exact: a, b must be odd and positive");
  }
  if (std::gcd(a, b) != 1) return std::nullopt;
  if (std::gcd(mul_order2(a).order, mul_order2(b).order) != 1) return std::nullopt;
  return std::max(min_weight(a, cfg), min_weight(b, cfg));
}

int prime_power_reduce(uint64_t p, int k) {
  if (p == 2) throw std::invalid_argument("prime_power_reduce: p = 2 is handled by even stripping");
  if (k < 1) throw std::invalid_argument("prime_power_reduce: k must be >= 1");
  if (k == 1) return 1;
  return std::min(k, wieferich_exponent(p));
}

FastResult fast_min_weight(uint64_t n, const SolverConfig& cfg) {
  return fast_min_weight(n, cfg, nullptr);
}

FastResult fast_min_weight(uint64_t n, const SolverConfig& cfg, LeafMemo* memo) {
  if (n == 0) throw std::invalid_argument("fast_min_weight: n must be positive");

  ReductionTrace trace;
  trace.n = n;

  const auto [m, shift] = odd_part(n);
  if (shift > 0) trace.steps.push_back({StepKind::EvenStrip, n, m, 0, 0, 0});

  if (m == 1) {
    trace.result = 1;
    return {1, std::move(trace)};
  }
  if (auto p = mersenne_exponent(m)) {
    trace.steps.push_back({StepKind::MersenneShortcut, m, 0, 0, 0, *p});
    trace.result = *p;
    return {*p, std::move(trace)};
  }

  std::vector<Part> parts;
  for (const auto& [p, k] : factorize(m).factors) {
    Part part;
    part.q = pow_u64(p, k);
    int k_reduced = prime_power_reduce(p, k);
    part.reduced = pow_u64(p, k_reduced);
    if (k_reduced < k) {
      trace.steps.push_back({StepKind::PrimePowerCollapse, p, 0, k, k_reduced, 0});
    }
    part.order = mul_order2(part.q).order;
    part.m = leaf_value(part.reduced, cfg, trace.steps, memo);
    parts.push_back(part);
  }

  // Merge parts in ascending order of l2; a part joins the merged group
  // only while the order stays coprime, otherwise it goes to the residual.
  std::sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) {
    return x.order != y.order ? x.order < y.order : x.q < y.q;
  });

  uint64_t group = 1, group_order = 1;
  int group_m = 0;
  std::vector<Part> residual;
  for (const Part& part : parts) {
    if (std::gcd(group_order, part.order) == 1) {
      if (group > 1) {
        trace.steps.push_back(
            {StepKind::CoprimeOrderSplit, group, part.q, 0, 0, std::max(group_m, part.m)});
      }
      group *= part.q;
      group_order *= part.order;
      group_m = std::max(group_m, part.m);
    } else {
      residual.push_back(part);
    }
  }

  if (residual.empty()) {
    trace.result = group_m;
    return {group_m, std::move(trace)};
  }

  uint64_t res_product = 1, res_order = 1;
  int64_t res_bound = 1;
  for (const Part& part : residual) {
    res_product *= part.q;
    res_order = std::lcm(res_order, part.order);
    res_bound = std::min<int64_t>(res_bound * part.m, INT32_MAX);
  }

  if (std::gcd(group_order, res_order) == 1) {
    int res_m = leaf_value(res_product, cfg, trace.steps, memo);
    int result = std::max(group_m, res_m);
    trace.steps.push_back({StepKind::CoprimeOrderSplit, group, res_product, 0, 0, result});
    trace.result = result;
    return {result, std::move(trace)};
  }

  // No exact rule applies across the group/residual boundary: record the
  // product inequality for diagnostics and solve the full odd part.
  trace.steps.push_back({StepKind::ProductBound, group, res_product, 0, 0,
                         static_cast<int>(std::min<int64_t>(group_m * res_bound, INT32_MAX))});
  int result = leaf_value(m, cfg, trace.steps, memo);
  trace.result = result;
  return {result, std::move(trace)};
}

std::vector<std::string> ReductionTrace::to_lines() const {
  std::vector<std::string> lines;
  for (const ReductionStep& s : steps) {
    std::ostringstream os;
    switch (s.kind) {
      case StepKind::EvenStrip:
        os << "even_strip " << s.a << " " << s.b;
        break;
      case StepKind::MersenneShortcut:
        os << "mersenne_shortcut " << s.a << " " << s.value;
        break;
      case StepKind::PrimePowerCollapse:
        os << "prime_power_collapse " << s.a << " " << s.k_from << " " << s.k_to;
        break;
      case StepKind::CoprimeOrderSplit:
        os << "coprime_order_split " << s.a << " " << s.b << " " << s.value;
        break;
      case StepKind::ProductBound:
        os << "product_bound " << s.a << " " << s.b << " " << s.value;
        break;
      case StepKind::BfsFallback:
        os << "bfs_fallback " << s.a << " " << s.value;
        break;
    }
    lines.push_back(os.str());
  }
  lines.push_back("result " + std::to_string(n) + " " + std::to_string(result));
  return lines;
}

std::string ReductionTrace::to_text() const {
  std::ostringstream os;
  for (const ReductionStep& s : steps) {
    switch (s.kind) {
      case StepKind::EvenStrip:
        os << "even_strip: M(" << s.a << ") = M(" << s.b << ")\n";
        break;
      case StepKind::MersenneShortcut:
        os << "mersenne_shortcut: M(" << s.a << ") = " << s.value << "  (" << s.a << " = 2^"
           << s.value << " - 1)\n";
        break;
      case StepKind::PrimePowerCollapse:
        os << "prime_power_collapse: M(" << s.a << "^" << s.k_from << ") = M(" << s.a << "^"
           << s.k_to << ")  (e_" << s.a << " = " << s.k_to << ")\n";
        break;
      case StepKind::CoprimeOrderSplit:
        os << "coprime_order_split: M(" << s.a * s.b << ") = max(M(" << s.a << "), M(" << s.b
           << ")) = " << s.value << "\n";
        break;
      case StepKind::ProductBound:
        os << "product_bound: M(" << s.a * s.b << ") <= " << s.value << "  (diagnostic only)\n";
        break;
      case StepKind::BfsFallback:
        os << "bfs_fallback: M(" << s.a << ") = " << s.value << "\n";
        break;
    }
  }
  os << "result: M(" << n << ") = " << result << "\n";
  return os.str();
}

int ReductionTrace::replay() const {
  std::map<uint64_t, int> known;
  known[1] = 1;
  std::map<uint64_t, uint64_t> alias;  // p^k -> p^k'
  uint64_t final_value = n;

  auto resolve = [&](uint64_t v) {
    while (alias.count(v)) v = alias.at(v);
    auto it = known.find(v);
    if (it == known.end()) throw std::logic_error("trace replay: missing leaf for " + std::to_string(v));
    return it->second;
  };

  for (const ReductionStep& s : steps) {
    switch (s.kind) {
      case StepKind::EvenStrip:
        final_value = s.b;
        break;
      case StepKind::MersenneShortcut:
        known[s.a] = s.value;
        break;
      case StepKind::PrimePowerCollapse:
        alias[pow_u64(s.a, s.k_from)] = pow_u64(s.a, s.k_to);
        break;
      case StepKind::CoprimeOrderSplit:
        known[s.a * s.b] = std::max(resolve(s.a), resolve(s.b));
        break;
      case StepKind::ProductBound:
        break;  // diagnostic, not part of the answer
      case StepKind::BfsFallback:
        known[s.a] = s.value;
        break;
    }
  }
  return resolve(final_value);
}

}  // namespace mhw
