#include "mhw/datastore.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mhw/composition.hpp"
#include "mhw/core_arith.hpp"

namespace mhw {

namespace {

uint64_t parse_u64(std::string_view text, const std::string& context) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::runtime_error(context + ": malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

int ValueCache::at(uint64_t n) const {
  if (!covers(n)) {
    throw std::out_of_range("ValueCache: n = " + std::to_string(n) +
                            " outside covered prefix [1, " + std::to_string(covered_max()) + "]");
  }
  return values_[n];
}

void ValueCache::ensure_size(uint64_t max_n) {
  if (max_n + 1 > values_.size()) values_.resize(max_n + 1, 0);
}

void ValueCache::set(uint64_t n, int m) {
  if (n == 0 || n >= values_.size()) throw std::out_of_range("ValueCache::set: n out of range");
  if (m < 1 || m > 255) throw std::invalid_argument("ValueCache::set: implausible M value");
  values_[n] = static_cast<uint8_t>(m);
}

ValueCache sweep(const ValueCache& base, uint64_t lo, uint64_t hi, unsigned threads,
                 const SolverConfig& cfg) {
  if (lo == 0 || hi < lo) throw std::invalid_argument("sweep: bad range");
  if (lo > base.covered_max() + 1) {
    throw std::invalid_argument("sweep: range starts at " + std::to_string(lo) +
                                " but the cache prefix ends at " +
                                std::to_string(base.covered_max()) + " (no holes allowed)");
  }

  ValueCache out = base;
  if (hi <= base.covered_max()) return out;  // idempotent re-sweep
  out.ensure_size(hi);

  const uint64_t start = base.covered_max() + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const uint64_t chunk_count = (hi - start) / kSweepChunk + 1;
  std::atomic<uint64_t> next_chunk{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    LeafMemo memo;
    while (true) {
      uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) return;
      uint64_t chunk_lo = start + c * kSweepChunk;
      uint64_t chunk_hi = std::min(hi, chunk_lo + kSweepChunk - 1);
      try {
        for (uint64_t n = chunk_lo | 1; n <= chunk_hi; n += 2) {
          out.data()[n] = static_cast<uint8_t>(fast_min_weight(n, cfg, &memo).m);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next_chunk.store(chunk_count);  // drain remaining work
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  // Even n take their odd part's value; ascending order guarantees n/2 is
  // already final.
  for (uint64_t n = start + (start & 1); n <= hi; n += 2) {
    out.data()[n] = out.data()[n / 2];
  }
  return out;
}

void save(const ValueCache& cache, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("save: cannot open '" + path + "' for writing");
  const uint64_t max = cache.covered_max();
  file << kCacheHeaderPrefix << max << '\n';
  std::string buffer;
  buffer.reserve(1 << 16);
  for (uint64_t n = 1; n <= max; ++n) {
    buffer += std::to_string(n);
    buffer += ',';
    buffer += std::to_string(cache.at(n));
    buffer += '\n';
    if (buffer.size() > (1 << 15)) {
      file << buffer;
      buffer.clear();
    }
  }
  file << buffer;
  if (!file) throw std::runtime_error("save: write to '" + path + "' failed");
}

ValueCache load(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("load: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(file, line)) throw std::runtime_error(path + ":1: empty cache file");
  std::string_view header(line);
  std::string_view prefix(kCacheHeaderPrefix);
  if (header.substr(0, prefix.size()) != prefix) {
    throw std::runtime_error(path + ":1: bad header (expected '" + std::string(prefix) + "N')");
  }
  const uint64_t max = parse_u64(header.substr(prefix.size()), path + ":1");

  ValueCache cache;
  cache.ensure_size(max);
  uint64_t expected = 1;
  uint64_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string context = path + ":" + std::to_string(line_no);
    size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(context + ": missing comma");
    uint64_t n = parse_u64(std::string_view(line).substr(0, comma), context);
    uint64_t m = parse_u64(std::string_view(line).substr(comma + 1), context);
    if (n != expected) {
      throw std::runtime_error(context + ": expected n = " + std::to_string(expected) + ", got " +
                               std::to_string(n));
    }
    if (n > max) throw std::runtime_error(context + ": n exceeds the declared max");
    if (m < 1 || m > 255) throw std::runtime_error(context + ": implausible value");
    cache.set(n, static_cast<int>(m));
    ++expected;
  }
  if (expected != max + 1) {
    throw std::runtime_error(path + ": truncated (covers [1, " + std::to_string(expected - 1) +
                             "] but header says " + std::to_string(max) + ")");
  }
  // Halving invariant: a cheap corruption check.
  for (uint64_t n = 2; n <= max; n += 2) {
    if (cache.at(n) != cache.at(n / 2)) {
      throw std::runtime_error(path + ": corrupt data, value at " + std::to_string(n) +
                               " differs from value at " + std::to_string(n / 2));
    }
  }
  return cache;
}

ValueCache merge(const ValueCache& a, const ValueCache& b) {
  const ValueCache& longer = a.covered_max() >= b.covered_max() ? a : b;
  const ValueCache& shorter = a.covered_max() >= b.covered_max() ? b : a;
  for (uint64_t n = 1; n <= shorter.covered_max(); ++n) {
    if (a.at(n) != b.at(n)) {
      throw std::runtime_error("merge: caches disagree at n = " + std::to_string(n) + " (" +
                               std::to_string(a.at(n)) + " vs " + std::to_string(b.at(n)) + ")");
    }
  }
  return longer;
}

void export_bfile(const ValueCache& cache, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("export_bfile: cannot open '" + path + "' for writing");
  std::string buffer;
  for (uint64_t n = 1; n <= cache.covered_max(); ++n) {
    buffer += std::to_string(n);
    buffer += ' ';
    buffer += std::to_string(cache.at(n));
    buffer += '\n';
    if (buffer.size() > (1 << 15)) {
      file << buffer;
      buffer.clear();
    }
  }
  file << buffer;
  if (!file) throw std::runtime_error("export_bfile: write failed");
}

}  // namespace mhw
