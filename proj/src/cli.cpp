#include "mhw/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mhw/composition.hpp"
#include "mhw/core_arith.hpp"
#include "mhw/datastore.hpp"
#include "mhw/stats.hpp"
#include "mhw/verify.hpp"

namespace mhw {

namespace {

// Distinguishes flag/input problems (exit 2) from computation failures.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ValueCache load_cache(const std::string& path) {
  if (path.empty()) throw UsageError("a cache file is required (--cache FILE)");
  try {
    return load(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

void print_suite(const SuiteResult& result) {
  std::cout << "suite " << result.name << ": " << (result.passed ? "PASS" : "FAIL") << " ("
            << result.checks << " checks, " << result.failures << " failures)";
  if (!result.detail.empty()) std::cout << " [" << result.detail << "]";
  std::cout << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"minimal Hamming weight of multiples: solver, sweeps and statistics"};
  app.require_subcommand(1);
  int exit_code = 0;

  // compute N [--explain]
  uint64_t compute_n = 0;
  bool explain = false;
  auto* compute = app.add_subcommand("compute", "print M(N)");
  compute->add_option("N", compute_n, "positive integer")->required()->check(CLI::PositiveNumber);
  compute->add_flag("--explain", explain, "print the reduction trace");
  compute->callback([&] {
    FastResult result = fast_min_weight(compute_n);
    std::cout << "M(" << compute_n << ") = " << result.m << "\n";
    if (explain) std::cout << result.trace.to_text();
  });

  // witness N
  uint64_t witness_n = 0;
  auto* witness_cmd = app.add_subcommand("witness", "print a minimal-weight multiple of N");
  witness_cmd->add_option("N", witness_n, "positive integer")->required()->check(CLI::PositiveNumber);
  witness_cmd->callback([&] {
    Witness w = min_weight_with_witness(witness_n);
    std::cout << "M(" << witness_n << ") = " << w.exponents.size() << "\n";
    std::cout << "exponents:";
    for (uint64_t e : w.exponents) std::cout << " " << e;
    std::cout << "\n";
    std::cout << "k = " << w.multiplier.to_decimal() << "\n";
    BigNat check = BigNat::sum_of_bits(w.exponents);
    uint64_t rem = check.mod_u64(witness_n);
    std::cout << "check: sum of " << w.exponents.size() << " powers of 2 = k * " << witness_n
              << ", remainder " << rem << "\n";
    if (rem != 0) throw std::runtime_error("witness failed verification");
  });

  // sweep --max N --threads T --out FILE [--resume FILE]
  uint64_t sweep_max = 0;
  unsigned sweep_threads = 0;
  std::string sweep_out, sweep_resume;
  auto* sweep_cmd = app.add_subcommand("sweep", "compute M(n) for n = 1..N into a cache file");
  sweep_cmd->add_option("--max", sweep_max, "upper end of the range")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  sweep_cmd->add_option("--out", sweep_out, "output cache file")->required();
  sweep_cmd->add_option("--resume", sweep_resume, "existing cache file to extend");
  sweep_cmd->callback([&] {
    ValueCache base;
    if (!sweep_resume.empty()) base = load_cache(sweep_resume);
    ValueCache cache = sweep(base, 1, sweep_max, sweep_threads);
    save(cache, sweep_out);
    std::cout << "cache [1, " << cache.covered_max() << "] written to " << sweep_out << "\n";
  });

  // stats cav / stats mav
  auto* stats_cmd = app.add_subcommand("stats", "exact-rational statistics over a cache");
  stats_cmd->require_subcommand(1);

  int cav_max_exp = 0;
  std::string cav_cache, cav_csv;
  auto* cav = stats_cmd->add_subcommand("cav", "dyadic block averages C_av / CO_av");
  cav->add_option("--max-exp", cav_max_exp, "largest block exponent J")->required()->check(CLI::PositiveNumber);
  cav->add_option("--cache", cav_cache, "cache file")->required();
  cav->add_option("--csv", cav_csv, "also write (j, num, den, decimal) rows");
  cav->callback([&] {
    ValueCache cache = load_cache(cav_cache);
    if (cav_max_exp < 1 || cav_max_exp > 40 ||
        cache.covered_max() < (uint64_t{1} << cav_max_exp) - 1) {
      throw UsageError("cache covers [1, " + std::to_string(cache.covered_max()) +
                       "], not enough for --max-exp " + std::to_string(cav_max_exp));
    }
    DyadicStats stats = dyadic_stats(cav_max_exp, cache);
    std::cout << "j\tC_av\tdecimal\tCO_av\tdecimal\n";
    for (int j = 1; j <= cav_max_exp; ++j) {
      ExactRatio c = stats.c_av(j), co = stats.co_av(j);
      std::cout << j << "\t" << c.to_fraction() << "\t" << c.to_decimal() << "\t"
                << co.to_fraction() << "\t" << co.to_decimal() << "\n";
    }
    TelescopingReport report = telescoping_check(cav_max_exp, stats);
    std::cout << "identities: " << (report.ok ? "PASS" : "FAIL") << " (" << report.checks
              << " checks)\n";
    for (const std::string& f : report.failures) std::cout << "  " << f << "\n";
    if (!cav_csv.empty()) {
      auto file = open_out(cav_csv);
      write_cav_csv(file, stats);
    }
    if (!report.ok) exit_code = 1;
  });

  uint64_t mav_at = 0;
  std::string mav_cache;
  auto* mav = stats_cmd->add_subcommand("mav", "running average M_av(x)");
  mav->add_option("--at", mav_at, "evaluation point x")->required()->check(CLI::PositiveNumber);
  mav->add_option("--cache", mav_cache, "cache file")->required();
  mav->callback([&] {
    ValueCache cache = load_cache(mav_cache);
    if (mav_at == 0 || cache.covered_max() < mav_at) {
      throw UsageError("cache covers [1, " + std::to_string(cache.covered_max()) +
                       "] but --at is " + std::to_string(mav_at));
    }
    ExactRatio avg = running_average(mav_at, cache);
    std::cout << "M_av(" << mav_at << ") = " << avg.to_fraction() << " = " << avg.to_decimal()
              << "\n";
  });

  // primes classify --limit L [--csv PATH]
  auto* primes_cmd = app.add_subcommand("primes", "prime classes P_k");
  primes_cmd->require_subcommand(1);
  uint64_t classify_limit = 0;
  std::string classify_csv;
  auto* classify = primes_cmd->add_subcommand("classify", "partition primes by M(p)");
  classify->add_option("--limit", classify_limit, "classify primes <= limit")->required()->check(CLI::PositiveNumber);
  classify->add_option("--csv", classify_csv, "write (p, m, order, parity) rows");
  classify->callback([&] {
    std::vector<PrimeClassRecord> records = classify_primes(classify_limit);
    std::map<int, std::vector<uint64_t>> classes;
    uint64_t odd_primes = 0, even_order = 0;
    for (const auto& rec : records) {
      classes[rec.mp].push_back(rec.p);
      if (rec.p != 2) {
        ++odd_primes;
        if (rec.order_even) ++even_order;
      }
    }
    std::cout << records.size() << " primes <= " << classify_limit << "\n";
    for (const auto& [k, members] : classes) {
      std::cout << "P_" << k << ": " << members.size() << " members, first:";
      for (size_t i = 0; i < members.size() && i < 8; ++i) std::cout << " " << members[i];
      std::cout << "\n";
    }
    ExactRatio fraction{static_cast<int64_t>(even_order), static_cast<int64_t>(odd_primes)};
    std::cout << "even-order fraction: " << even_order << "/" << odd_primes << " = "
              << fraction.to_decimal() << " (target " << kHasseDensity.to_fraction() << " = "
              << kHasseDensity.to_decimal() << ")\n";
    if (!classify_csv.empty()) {
      auto file = open_out(classify_csv);
      write_prime_class_csv(file, records);
    }
  });

  // sturdy --limit L --cache FILE
  uint64_t sturdy_limit = 0;
  std::string sturdy_cache;
  auto* sturdy_cmd = app.add_subcommand("sturdy", "list n <= L with M(n) = s2(n)");
  sturdy_cmd->add_option("--limit", sturdy_limit, "upper bound")->required()->check(CLI::PositiveNumber);
  sturdy_cmd->add_option("--cache", sturdy_cache, "cache file")->required();
  sturdy_cmd->callback([&] {
    ValueCache cache = load_cache(sturdy_cache);
    if (cache.covered_max() < sturdy_limit) {
      throw UsageError("cache covers [1, " + std::to_string(cache.covered_max()) +
                       "] but --limit is " + std::to_string(sturdy_limit));
    }
    uint64_t count = 0;
    for (uint64_t n = 1; n <= sturdy_limit; ++n) {
      if (cache.at(n) == hamming_weight(n)) {
        std::cout << n << "\n";
        ++count;
      }
    }
    std::cerr << count << " sturdy numbers <= " << sturdy_limit << "\n";
  });

  // verify --suite NAME --cache FILE
  std::string verify_suite, verify_cache;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--suite", verify_suite, "table1|matrix1000|lemmas|theorem2|oracle")
      ->required()
      ->check(CLI::IsMember({"table1", "matrix1000", "lemmas", "theorem2", "oracle"}));
  verify_cmd->add_option("--cache", verify_cache, "cache file (table1/matrix1000)");
  verify_cmd->callback([&] {
    SuiteResult result;
    if (verify_suite == "table1") {
      result = verify_table1(load_cache(verify_cache));
    } else if (verify_suite == "matrix1000") {
      result = verify_matrix1000(load_cache(verify_cache));
    } else if (verify_suite == "lemmas") {
      result = verify_lemmas();
    } else if (verify_suite == "theorem2") {
      result = verify_theorem2();
    } else {
      result = verify_oracle();
    }
    print_suite(result);
    if (!result.passed) exit_code = 1;
  });

  // export bfile --cache FILE --out PATH
  auto* export_cmd = app.add_subcommand("export", "export cache data");
  export_cmd->require_subcommand(1);
  std::string bfile_cache, bfile_out;
  auto* bfile = export_cmd->add_subcommand("bfile", "OEIS b-file format (n m per line)");
  bfile->add_option("--cache", bfile_cache, "cache file")->required();
  bfile->add_option("--out", bfile_out, "output path")->required();
  bfile->callback([&] {
    ValueCache cache = load_cache(bfile_cache);
    export_bfile(cache, bfile_out);
    std::cout << "b-file with " << cache.covered_max() << " terms written to " << bfile_out
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace mhw
