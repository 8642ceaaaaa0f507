#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "postage/analysis.hpp"
#include "postage/error.hpp"
#include "postage/report_json.hpp"
#include "postage/search.hpp"

using namespace postage;
namespace fs = std::filesystem;

namespace {

std::vector<oracle::Elems> as_elems(const std::vector<Basis>& bases) {
  std::vector<oracle::Elems> out;
  for (const auto& b : bases) out.emplace_back(b.elements().begin(), b.elements().end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("postage_test_" + std::to_string(std::hash<std::string>{}(
                                  doctest::getContextOptions()->currentTest
                                      ? doctest::getContextOptions()->currentTest->m_name
                                      : "x")));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> scan_lines(const ScanSpec& spec, unsigned threads) {
  std::vector<std::string> lines;
  scan_conjecture(
      spec,
      [&](const ScanRecord& r) {
        lines.push_back(scan_record_to_json(r));
        return true;
      },
      threads);
  return lines;
}

}  // namespace

TEST_CASE("enumerate_symmetric small cases") {
  CHECK(enumerate_symmetric(3, 6) ==
        std::vector<Basis>{Basis({1, 2, 3}), Basis({1, 3, 4}), Basis({1, 4, 5}), Basis({1, 5, 6})});
  CHECK(enumerate_symmetric(2, 5) == std::vector<Basis>{Basis({1, 2})});
  CHECK(enumerate_symmetric(2, 1).empty());
  CHECK(enumerate_symmetric(1, 1) == std::vector<Basis>{Basis({1})});
  CHECK(enumerate_symmetric(1, 40) == std::vector<Basis>{Basis({1})});
  CHECK(enumerate_symmetric(3, 2).empty());
}

TEST_CASE("enumerate_symmetric equals filtering every basis") {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::uint64_t m = k; m <= 20; ++m) {
      std::vector<oracle::Elems> expected;
      for (const auto& e : oracle::all_bases(k, m))
        if (oracle::symmetric_by_definition(e)) expected.push_back(e);
      REQUIRE(as_elems(enumerate_symmetric(k, m)) == expected);
    }
  }
}

TEST_CASE("for_each_basis equals subset enumeration") {
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<Basis> got;
    for_each_basis(k, 12, [&](const Basis& b) {
      got.push_back(b);
      return true;
    });
    CHECK(as_elems(got) == oracle::all_bases(k, 12));
  }
}

TEST_CASE("visitors can stop enumeration early") {
  int seen = 0;
  CHECK_FALSE(for_each_symmetric(5, 30, [&](const Basis&) { return ++seen < 3; }));
  CHECK(seen == 3);
}

TEST_CASE("scan flags the nine-element counterexample") {
  ScanSpec spec{9, 9, 28, kDefaultH1Cap, ScanMode::Symmetric};
  bool found = false;
  auto summary = scan_conjecture(spec, [&](const ScanRecord& r) {
    REQUIRE(r.report);
    if (r.basis == Basis({1, 3, 5, 8, 20, 23, 25, 27, 28})) {
      found = true;
      CHECK(r.report->counterexample);
    }
    return true;
  });
  CHECK(found);
  CHECK(summary.counterexamples >= 1);
  CHECK(summary.complete);
}

TEST_CASE("scan of k = 1") {
  ScanSpec spec{1, 1, 1, kDefaultH1Cap, ScanMode::Symmetric};
  auto lines = scan_lines(spec, 1);
  REQUIRE(lines.size() == 1);
  auto r = report_from_json(lines[0]);
  CHECK(r.basis == Basis({1}));
  CHECK(r.conjecture_holds);
}

TEST_CASE("scan output is independent of thread count") {
  ScanSpec spec{1, 7, 26, kDefaultH1Cap, ScanMode::Symmetric};
  auto one = scan_lines(spec, 1);
  CHECK(one.size() > 256);  // spans several batches
  CHECK(scan_lines(spec, 3) == one);
  CHECK(scan_lines(spec, 8) == one);

  ScanSpec all{3, 3, 40, 16, ScanMode::All};
  CHECK(scan_lines(all, 4) == scan_lines(all, 1));
}

TEST_CASE("scan records per-basis errors and keeps going") {
  ScanSpec spec{2, 2, 4, StampCount{1} << 27, ScanMode::All};
  std::vector<ScanRecord> records;
  auto summary = scan_conjecture(spec, [&](const ScanRecord& r) {
    records.push_back(r);
    return true;
  });
  REQUIRE(records.size() == 3);
  CHECK(records[0].report);  // {1,2} is symmetric, capped by the theorem bound
  CHECK_FALSE(records[1].report);
  CHECK(records[1].error.find("Overflow") != std::string::npos);
  CHECK(summary.errors == 2);
  CHECK(scan_record_to_json(records[1]).find("\"error\"") != std::string::npos);
}

TEST_CASE("scan spec validation") {
  CHECK_THROWS_AS(validate(ScanSpec{0, 1, 5, 64, ScanMode::Symmetric}), Error);
  CHECK_THROWS_AS(validate(ScanSpec{3, 2, 5, 64, ScanMode::Symmetric}), Error);
  CHECK_THROWS_AS(validate(ScanSpec{1, 5, 4, 64, ScanMode::Symmetric}), Error);
  CHECK_NOTHROW(validate(ScanSpec{1, 5, 5, 64, ScanMode::Symmetric}));
}

TEST_CASE("scan file: summary line and checkpoint") {
  TempDir dir;
  ScanSpec spec{1, 4, 20, kDefaultH1Cap, ScanMode::Symmetric};
  ScanFileOptions opts{dir.path / "s.jsonl", false, 1, std::nullopt};
  auto summary = run_scan(spec, opts);
  CHECK(summary.complete);
  auto text = slurp(opts.out);
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == summary.scanned + 1);
  CHECK(lines.back().rfind("{\"summary\":{\"scanned\":" + std::to_string(summary.scanned), 0) == 0);
  CHECK(slurp(checkpoint_path(opts.out)) ==
        report_from_json(lines[lines.size() - 2]).basis.to_string() + "\n");
}

TEST_CASE("interrupted scans resume to an identical file") {
  TempDir dir;
  ScanSpec spec{1, 7, 26, kDefaultH1Cap, ScanMode::Symmetric};
  ScanFileOptions full{dir.path / "full.jsonl", false, 1, std::nullopt};
  run_scan(spec, full);
  const auto expected = slurp(full.out);

  for (std::uint64_t stop : {1u, 255u, 256u, 300u, 600u}) {
    ScanFileOptions part{dir.path / "part.jsonl", false, 2, stop};
    auto first = run_scan(spec, part);
    CHECK_FALSE(first.complete);
    CHECK(first.scanned == stop);
    part.resume = true;
    part.stop_after.reset();
    auto rest = run_scan(spec, part);
    CHECK(rest.complete);
    CHECK(slurp(part.out) == expected);
  }
}

TEST_CASE("resume discards lines written after the checkpoint") {
  TempDir dir;
  ScanSpec spec{1, 5, 24, kDefaultH1Cap, ScanMode::Symmetric};
  ScanFileOptions full{dir.path / "full.jsonl", false, 1, std::nullopt};
  run_scan(spec, full);
  const auto expected = slurp(full.out);

  ScanFileOptions part{dir.path / "crash.jsonl", false, 1, 40};
  run_scan(spec, part);
  {
    // A crash between writing records and updating the checkpoint, mid-line.
    std::ofstream app(part.out, std::ios::app);
    app << "{\"basis\":\"1,2,3\",\"k\":3,\"symmetric\":true}\n{\"basis\":\"1,";
  }
  part.resume = true;
  part.stop_after.reset();
  run_scan(spec, part);
  CHECK(slurp(part.out) == expected);

  // Resuming a finished scan rewrites the same file.
  run_scan(spec, part);
  CHECK(slurp(part.out) == expected);
}

TEST_CASE("search_extremal small cases") {
  auto one = search_extremal(1, 3);
  CHECK(one.n_star == 3);
  CHECK(one.witnesses == std::vector<Basis>{Basis({1, 2, 3})});

  auto two = search_extremal(2, 2);
  CHECK(two.n_star == 4);
  CHECK(two.ak_ceiling == 3);
  CHECK(two.witnesses == std::vector<Basis>{Basis({1, 2}), Basis({1, 3})});
  // Every {1, a} with a <= 8 covers at most 4 with two stamps.
  CHECK(oracle::extremal(2, 2, 8).n_star == 4);
}

TEST_CASE("search_extremal agrees with exhaustive enumeration") {
  struct Case {
    StampCount h;
    std::size_t k;
  };
  for (auto [h, k] : {Case{3, 3}, Case{2, 4}, Case{4, 3}, Case{3, 4}, Case{2, 5}, Case{5, 2}}) {
    auto got = search_extremal(h, k);
    auto want = oracle::extremal(h, k, got.ak_ceiling);
    CAPTURE(h);
    CAPTURE(k);
    CHECK(got.n_star == want.n_star);
    CHECK(as_elems(got.witnesses) == want.witnesses);
    // The default ceiling is large enough: widening the box changes nothing.
    auto wider = oracle::extremal(h, k, got.ak_ceiling + 3);
    CHECK(wider.n_star == want.n_star);
    CHECK(wider.witnesses == want.witnesses);
    CHECK(got.n_star <= std::uint64_t{h} * got.ak_ceiling);
    for (const auto& s : enumerate_symmetric(k, got.ak_ceiling)) CHECK(cover(s, h) <= got.n_star);
  }
}

TEST_CASE("search_extremal guards") {
  CHECK_THROWS_AS(search_extremal(9, 9), Error);
  try {
    search_extremal(3, 4, ExtremalOptions{std::nullopt, 10});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(search_extremal(3, 4, ExtremalOptions{2, 1000}), Error);
  CHECK(search_extremal(3, 3, ExtremalOptions{30, 1000}).n_star == 15);
}
