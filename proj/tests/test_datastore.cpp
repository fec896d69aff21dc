#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mhw/datastore.hpp"
#include "mhw/known_values.hpp"

using namespace mhw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("mhw_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("sweep reproduces the reference values") {
  ValueCache cache = sweep(ValueCache{}, 1, 1000, 2);
  CHECK(cache.covered_max() == 1000);
  for (int n = 1; n <= 1000; ++n) {
    CAPTURE(n);
    CHECK(cache.at(n) == kKnownFirst1000[n - 1]);
  }
  // published dataset spot values
  CHECK(cache.at(126) == 6);
  CHECK(cache.at(127) == 7);
  CHECK(cache.at(128) == 1);
  CHECK(cache.at(508) == 7);
  CHECK(cache.at(510) == 8);
  CHECK(cache.at(511) == 9);
  CHECK(cache.at(512) == 1);
}

TEST_CASE("sweep is deterministic across thread counts") {
  ValueCache one = sweep(ValueCache{}, 1, 3000, 1);
  ValueCache four = sweep(ValueCache{}, 1, 3000, 4);
  CHECK(one == four);

  TempDir tmp;
  save(one, tmp.file("one.txt"));
  save(four, tmp.file("four.txt"));
  CHECK(slurp(tmp.file("one.txt")) == slurp(tmp.file("four.txt")));
}

TEST_CASE("sweep resumes, is idempotent, and rejects gaps") {
  ValueCache base = sweep(ValueCache{}, 1, 100, 2);
  ValueCache extended = sweep(base, 101, 300, 2);
  ValueCache fresh = sweep(ValueCache{}, 1, 300, 2);
  CHECK(extended == fresh);

  ValueCache again = sweep(fresh, 1, 300, 2);
  CHECK(again == fresh);  // idempotent over covered range

  ValueCache overlap = sweep(base, 50, 200, 2);
  CHECK(overlap.covered_max() == 200);
  for (uint64_t n = 1; n <= 200; ++n) CHECK(overlap.at(n) == fresh.at(n));

  CHECK_THROWS_AS(sweep(base, 102, 200, 2), std::invalid_argument);
  CHECK_THROWS_AS(sweep(base, 0, 50, 2), std::invalid_argument);
}

TEST_CASE("sweep propagates solver sizing errors") {
  SolverConfig tiny{.max_residues = 64};
  CHECK_THROWS_AS(sweep(ValueCache{}, 1, 1000, 2, tiny), SizingError);
}

TEST_CASE("save / load round trip is byte stable") {
  TempDir tmp;
  ValueCache cache = sweep(ValueCache{}, 1, 1000, 2);
  save(cache, tmp.file("a.txt"));
  ValueCache loaded = load(tmp.file("a.txt"));
  CHECK(loaded == cache);
  save(loaded, tmp.file("b.txt"));
  CHECK(slurp(tmp.file("a.txt")) == slurp(tmp.file("b.txt")));

  std::string text = slurp(tmp.file("a.txt"));
  CHECK(text.rfind("#mhw v1 max=1000\n1,1\n2,1\n3,2\n", 0) == 0);
  CHECK(text.back() == '\n');
}

TEST_CASE("load rejects malformed input with line numbers") {
  TempDir tmp;

  spill(tmp.file("bad_header.txt"), "#other v9 max=3\n1,1\n2,1\n3,2\n");
  CHECK_THROWS_WITH_AS(load(tmp.file("bad_header.txt")), doctest::Contains(":1:"),
                       std::runtime_error);

  spill(tmp.file("bad_line.txt"), "#mhw v1 max=3\n1,1\n2;1\n3,2\n");
  CHECK_THROWS_WITH_AS(load(tmp.file("bad_line.txt")), doctest::Contains(":3:"),
                       std::runtime_error);

  spill(tmp.file("bad_order.txt"), "#mhw v1 max=3\n1,1\n3,2\n2,1\n");
  CHECK_THROWS_WITH_AS(load(tmp.file("bad_order.txt")), doctest::Contains("expected n = 2"),
                       std::runtime_error);

  spill(tmp.file("truncated.txt"), "#mhw v1 max=5\n1,1\n2,1\n");
  CHECK_THROWS_WITH_AS(load(tmp.file("truncated.txt")), doctest::Contains("truncated"),
                       std::runtime_error);

  spill(tmp.file("halving.txt"), "#mhw v1 max=4\n1,1\n2,1\n3,2\n4,2\n");
  CHECK_THROWS_WITH_AS(load(tmp.file("halving.txt")), doctest::Contains("corrupt"),
                       std::runtime_error);

  CHECK_THROWS_AS(load(tmp.file("missing.txt")), std::runtime_error);
}

TEST_CASE("merge takes the union prefix and flags conflicts") {
  ValueCache small = sweep(ValueCache{}, 1, 100, 2);
  ValueCache big = sweep(ValueCache{}, 1, 200, 2);
  ValueCache merged = merge(small, big);
  CHECK(merged.covered_max() == 200);
  CHECK(merged == big);
  CHECK(merge(big, small) == big);

  ValueCache corrupted = small;
  corrupted.set(99, small.at(99) + 1);
  CHECK_THROWS_WITH_AS(merge(corrupted, big), doctest::Contains("n = 99"), std::runtime_error);
}

TEST_CASE("b-file export") {
  TempDir tmp;
  ValueCache cache = sweep(ValueCache{}, 1, 32, 2);
  export_bfile(cache, tmp.file("b.txt"));
  std::string text = slurp(tmp.file("b.txt"));
  CHECK(text.rfind("1 1\n2 1\n3 2\n4 1\n", 0) == 0);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 32);
}

TEST_CASE("cache accessors") {
  ValueCache cache = sweep(ValueCache{}, 1, 10, 1);
  CHECK(cache.covers(10));
  CHECK(!cache.covers(11));
  CHECK(!cache.covers(0));
  CHECK_THROWS_AS(cache.at(11), std::out_of_range);
  CHECK_THROWS_AS(cache.at(0), std::out_of_range);
  CHECK_THROWS_AS(cache.set(3, 0), std::invalid_argument);
}
