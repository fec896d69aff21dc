#include "mhw/stats.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "mhw/composition.hpp"
#include "mhw/core_arith.hpp"

namespace mhw {

namespace {

void check_block_index(int j, int max_block) {
  if (j < 1 || j > max_block) {
    throw std::out_of_range("block index " + std::to_string(j) + " outside [1, " +
                            std::to_string(max_block) + "]");
  }
}

}  // namespace

ExactRatio DyadicStats::c_av(int j) const {
  check_block_index(j, max_block);
  return {block_sums[j], int64_t{1} << (j - 1)};
}

ExactRatio DyadicStats::co_av(int j) const {
  check_block_index(j, max_block);
  int64_t odd_count = j == 1 ? 1 : int64_t{1} << (j - 2);
  return {odd_block_sums[j], odd_count};
}

ExactRatio DyadicStats::m_av_at_pow() const {
  int64_t total = 1;  // M(2^J) itself
  for (int j = 1; j <= max_block; ++j) total += block_sums[j];
  return {total, int64_t{1} << max_block};
}

DyadicStats dyadic_stats(int max_block, const ValueCache& cache) {
  if (max_block < 1 || max_block > 40) {
    throw std::invalid_argument("dyadic_stats: block exponent out of range");
  }
  const uint64_t need = (uint64_t{1} << max_block) - 1;
  if (cache.covered_max() < need) {
    throw std::invalid_argument("dyadic_stats: cache covers [1, " +
                                std::to_string(cache.covered_max()) + "] but [" +
                                std::to_string(cache.covered_max() + 1) + ", " +
                                std::to_string(need) + "] is missing");
  }

  DyadicStats stats;
  stats.max_block = max_block;
  stats.block_sums.assign(max_block + 1, 0);
  stats.odd_block_sums.assign(max_block + 1, 0);
  for (int j = 1; j <= max_block; ++j) {
    const uint64_t lo = uint64_t{1} << (j - 1);
    const uint64_t hi = (uint64_t{1} << j) - 1;
    int64_t total = 0, odd_total = 0;
    for (uint64_t k = lo; k <= hi; ++k) {
      int m = cache.at(k);
      total += m;
      if (k & 1) odd_total += m;
    }
    stats.block_sums[j] = total;
    stats.odd_block_sums[j] = odd_total;
  }
  return stats;
}

ExactRatio running_average(uint64_t x, const ValueCache& cache) {
  if (x == 0) throw std::invalid_argument("running_average: x must be positive");
  if (cache.covered_max() < x) {
    throw std::invalid_argument("running_average: cache covers [1, " +
                                std::to_string(cache.covered_max()) + "] but x = " +
                                std::to_string(x));
  }
  int64_t total = 0;
  for (uint64_t k = 1; k <= x; ++k) total += cache.at(k);
  return {total, static_cast<int64_t>(x)};
}

TelescopingReport telescoping_check(int max_block, const DyadicStats& stats) {
  if (max_block > stats.max_block) {
    throw std::invalid_argument("telescoping_check: stats only reach block " +
                                std::to_string(stats.max_block));
  }
  TelescopingReport report;
  const ExactRatio half{1, 2};

  for (int j = 2; j <= max_block; ++j) {
    ++report.checks;
    ExactRatio lhs = stats.c_av(j);
    ExactRatio rhs = stats.c_av(j - 1) * half + stats.co_av(j) * half;
    if (!(lhs == rhs)) {
      report.ok = false;
      report.failures.push_back("recursion fails at j = " + std::to_string(j) + ": " +
                                lhs.to_fraction() + " != " + rhs.to_fraction());
    }
  }

  // Telescoped form: 2^j * c_av(j) = 1 + sum_{i<=j} 2^{i-1} * co_av(i).
  ExactRatio weighted{1, 1};
  for (int j = 1; j <= max_block; ++j) {
    ++report.checks;
    weighted = weighted + ExactRatio{int64_t{1} << (j - 1), 1} * stats.co_av(j);
    ExactRatio lhs = ExactRatio{int64_t{1} << j, 1} * stats.c_av(j);
    if (!(lhs == weighted)) {
      report.ok = false;
      report.failures.push_back("telescoped numerator fails at j = " + std::to_string(j) + ": " +
                                lhs.to_fraction() + " != " + weighted.to_fraction());
    }
  }

  // Odd-sum identity: each block sum equals the sum of M over all odd
  // k below the block's end (halving maps the block onto those k).
  int64_t odd_total = 0;
  for (int j = 1; j <= max_block; ++j) {
    ++report.checks;
    odd_total += stats.odd_block_sums[j];
    if (stats.block_sums[j] != odd_total) {
      report.ok = false;
      report.failures.push_back("odd-sum identity fails at j = " + std::to_string(j) + ": block " +
                                std::to_string(stats.block_sums[j]) + " != odd total " +
                                std::to_string(odd_total));
    }
  }
  return report;
}

std::vector<PrimeClassRecord> classify_primes(uint64_t limit, unsigned threads,
                                              const SolverConfig& cfg) {
  const std::vector<uint64_t> primes = primes_up_to(limit);
  std::vector<PrimeClassRecord> records(primes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, primes.size());

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      uint64_t p = primes[i];
      if (p == 2) {
        records[i] = {2, 1, 0, false};
        continue;
      }
      uint64_t order = mul_order2(p).order;
      records[i] = {p, min_weight(p, cfg), order, order % 2 == 0};
    }
  };

  std::vector<std::thread> pool;
  size_t per_thread = (primes.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    size_t begin = t * per_thread;
    size_t end = std::min(primes.size(), begin + per_thread);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& t : pool) t.join();
  return records;
}

std::vector<uint64_t> prime_class(std::span<const PrimeClassRecord> records, int k) {
  std::vector<uint64_t> out;
  for (const auto& rec : records) {
    if (rec.mp == k) out.push_back(rec.p);
  }
  return out;
}

HasseEstimate hasse_fraction(uint64_t limit, unsigned threads) {
  if (limit < 3) throw std::invalid_argument("hasse_fraction: need at least one odd prime");
  const std::vector<uint64_t> primes = primes_up_to(limit);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, primes.size());

  std::vector<uint64_t> even_counts(threads, 0);
  std::vector<uint64_t> odd_prime_counts(threads, 0);
  auto work = [&](unsigned tid, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      if (primes[i] == 2) continue;
      ++odd_prime_counts[tid];
      if (mul_order2(primes[i]).order % 2 == 0) ++even_counts[tid];
    }
  };

  std::vector<std::thread> pool;
  size_t per_thread = (primes.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    size_t begin = t * per_thread;
    size_t end = std::min(primes.size(), begin + per_thread);
    if (begin < end) pool.emplace_back(work, t, begin, end);
  }
  for (auto& t : pool) t.join();

  HasseEstimate estimate;
  for (unsigned t = 0; t < threads; ++t) {
    estimate.even_order += even_counts[t];
    estimate.odd_primes += odd_prime_counts[t];
  }
  return estimate;
}

bool is_sturdy(uint64_t n, const SolverConfig& cfg) {
  return fast_min_weight(n, cfg).m == hamming_weight(n);
}

uint64_t sturdy_family(int s, int k, const SolverConfig& cfg) {
  if (s < 1 || k < 1 || s * k > 62) {
    throw std::invalid_argument("sturdy_family: need s, k >= 1 with s*k <= 62");
  }
  uint64_t n = ((uint64_t{1} << (s * k)) - 1) / ((uint64_t{1} << s) - 1);
  if (!is_sturdy(n, cfg)) {
    throw std::logic_error("sturdy_family: member " + std::to_string(n) + " failed the check");
  }
  return n;
}

void write_cav_csv(std::ostream& out, const DyadicStats& stats) {
  out << "j,c_av_num,c_av_den,c_av_decimal\n";
  for (int j = 1; j <= stats.max_block; ++j) {
    ExactRatio r = stats.c_av(j);
    out << j << ',' << r.num << ',' << r.den << ',' << r.to_decimal() << '\n';
  }
}

void write_prime_class_csv(std::ostream& out, std::span<const PrimeClassRecord> records) {
  out << "p,m,order,order_even\n";
  for (const auto& rec : records) {
    out << rec.p << ',' << rec.mp << ',' << rec.order << ',' << (rec.order_even ? 1 : 0) << '\n';
  }
}

void write_sturdy_csv(std::ostream& out, std::span<const uint64_t> values, const ValueCache& cache) {
  out << "n,m,s2\n";
  for (uint64_t n : values) {
    out << n << ',' << cache.at(n) << ',' << hamming_weight(n) << '\n';
  }
}

}  // namespace mhw
