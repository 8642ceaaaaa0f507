// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "postage/postage.hpp"

using namespace postage;
using Clock = std::chrono::steady_clock;

namespace {

/// Collects the first few failure messages for a criterion.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++count_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " failure(s)";
    for (const auto& m : messages_) s += "\n      - " + m;
    return s;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Fn>
double timed_ms(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return millis_since(start);
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// All symmetric bases with k <= 7 and a_k <= 40.
std::vector<Basis> symmetric_box() {
  std::vector<Basis> out;
  for (std::size_t k = 1; k <= 7; ++k) {
    auto part = enumerate_symmetric(k, 40);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void golden_values(Findings& f) {
  const Basis selmer({1, 3, 6, 10});
  const Basis a9({1, 3, 5, 8, 20, 23, 25, 27, 28});
  const Basis a10({1, 5, 7, 12, 47, 82, 87, 89, 93, 94});

  std::vector<std::uint64_t> got;
  auto ms = timed_ms([&] {
    for (StampCount h = 1; h <= 3; ++h) got.push_back(cover(selmer, h));
  });
  f.expect(got == std::vector<std::uint64_t>{1, 4, 23}, "cover({1,3,6,10}, 1..3) = 1,4,23");
  f.expect(ms < 1.0, "{1,3,6,10} covers took " + std::to_string(ms) + " ms (limit 1 ms)");

  got.clear();
  ms = timed_ms([&] {
    for (StampCount h = 2; h <= 4; ++h) got.push_back(cover(a9, h));
  });
  f.expect(got == std::vector<std::uint64_t>{6, 41, 112}, "cover(A9, 2..4) = 6,41,112");
  f.expect(got.back() == 4 * a9.top(), "n(4, A9) = 4 a_9");
  f.expect(ms < 10.0, "A9 covers took " + std::to_string(ms) + " ms (limit 10 ms)");

  got.clear();
  ms = timed_ms([&] {
    for (StampCount h = 4; h <= 6; ++h) got.push_back(cover(a10, h));
  });
  f.expect(got == std::vector<std::uint64_t>{34, 132, 564}, "cover(A10(5), 4..6) = 34,132,564");
  f.expect(got.back() == 6 * a10.top(), "n(6, A10(5)) = 6 a_10");
  f.expect(ms < 50.0, "A10(5) covers took " + std::to_string(ms) + " ms (limit 50 ms)");

  auto r9 = analyze(a9);
  f.expect(r9.h0 == 3 && r9.h1 == std::optional<StampCount>(4), "analyze(A9): h0=3, h1=4");
  auto r10 = analyze(a10);
  f.expect(r10.h0 == 5 && r10.h1 == std::optional<StampCount>(6), "analyze(A10(5)): h0=5, h1=6");

  f.expect(family_a5(3) == Basis({1, 3, 5, 8, 20}), "family_a5(3)");
  f.expect(family_a5(5) == Basis({1, 5, 7, 12, 47}), "family_a5(5)");
  f.expect(family_a9(3) == a9, "family_a9(3) = A9");
  f.expect(family_a10(5) == a10, "family_a10(5) = A10(5)");
  f.expect(differences(a9) == std::vector<std::uint64_t>{1, 2, 2, 3, 12, 3, 2, 2, 1},
           "differences(A9) = 1,2,2,3,12,3,2,2,1");
}

void family_claim(Findings& f) {
  auto start = Clock::now();
  auto check = [&](const std::string& name, const Basis& b, std::uint64_t p) {
    auto h0 = compute_h0(b);
    auto h1 = compute_h1(b, theorem_bound(h0));
    f.expect(h0 == p, name + ": h0 = " + str(h0) + ", expected " + str(p));
    f.expect(h1 == std::optional<StampCount>(static_cast<StampCount>(p + 1)),
             name + ": h1 = " + (h1 ? str(*h1) : "none") + ", expected " + str(p + 1));
  };
  for (std::uint64_t p : {3, 5, 7}) check("A9(" + str(p) + ")", family_a9(p), p);
  for (std::uint64_t p : {5, 7}) check("A10(" + str(p) + ")", family_a10(p), p);
  auto ms = millis_since(start);
  f.expect(ms < 30'000.0, "family claim took " + std::to_string(ms) + " ms (limit 30 s)");
}

void lemma_suite(Findings& f) {
  auto start = Clock::now();
  std::uint64_t reflections = 0;
  for (const auto& b : symmetric_box()) {
    const auto h0 = compute_h0(b);
    const auto target = std::uint64_t{h0} * b.top();
    MinStampTable table(b, target);
    for (std::uint64_t x = 0; x < b.top(); ++x) {
      try {
        auto g = find_generation(b, x, h0);
        auto r = reflect_generation(b, g, h0);
        f.expect(r.consistent_with(b) && r.value == target - x && r.weight == h0 &&
                     table[r.value] <= h0,
                 "reflection of x=" + str(x) + " in " + b.to_string());
        ++reflections;
      } catch (const Error& e) {
        f.expect(false, b.to_string() + " x=" + str(x) + ": " + e.what());
      }
    }
  }
  f.expect(reflections > 0, "box is empty");
  auto ms = millis_since(start);
  f.expect(ms < 60'000.0, "lemma suite took " + std::to_string(ms) + " ms (limit 60 s)");
}

void theorem_suite(Findings& f) {
  for (const auto& b : symmetric_box()) {
    const auto h0 = compute_h0(b);
    const auto bound = theorem_bound(h0);
    auto h1 = compute_h1(b, bound);
    f.expect(h1 && *h1 >= h0 && *h1 <= bound,
             b.to_string() + ": h1 not in [h0, max(h0, 2h0-2)] = [" + str(h0) + ", " +
                 str(bound) + "]");
    // Stitched ranges at h = 2h0 - 2 (== h0 when h0 = 2).
    auto check = check_theorem_range(b);
    f.expect(check.h == bound && check.covered,
             b.to_string() + ": gap at " + (check.first_gap ? str(*check.first_gap) : "?") +
                 " with h = " + str(check.h));
  }
}

void conjecture_scan(Findings& f) {
  auto start = Clock::now();
  ScanSpec spec{1, 5, 30, kDefaultH1Cap, ScanMode::Symmetric};
  auto summary = scan_conjecture(spec, [&](const ScanRecord& r) {
    f.expect(r.report.has_value(), r.basis.to_string() + ": " + r.error);
    if (r.report) f.expect(!r.report->counterexample, r.basis.to_string() + " is a counterexample");
    return true;
  });
  f.expect(summary.complete && summary.scanned > 0, "scan incomplete");
  f.expect(summary.counterexamples == 0, str(summary.counterexamples) + " counterexamples");
  auto ms = millis_since(start);
  f.expect(ms < 120'000.0, "scan took " + std::to_string(ms) + " ms (limit 120 s)");
}

void oracle_equivalence(Findings& f) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& e : oracle::all_bases(k, 12)) {
      Basis b(e);
      for (StampCount h = 1; h <= 4; ++h) {
        auto n = cover(b, h);
        f.expect(n == brute_force_cover(b, h), b.to_string() + " h=" + str(h) + " vs brute force");
        f.expect(n == oracle::cover(e, h), b.to_string() + " h=" + str(h) + " vs reachable sets");
      }
    }
  }
}

void core_invariants(Findings& f) {
  std::mt19937_64 rng(0x5eed);
  constexpr int kCases = 1000;
  constexpr StampCount kHMax = 14;
  for (int trial = 0; trial < kCases; ++trial) {
    auto b = gen::random_basis(rng, 8, 60);
    const auto top = b.top();
    const auto tag = b.to_string();
    auto rows = cover_profile(b, kHMax).rows;
    std::optional<StampCount> first_sat;
    for (const auto& row : rows) {
      f.expect(row.h <= row.n && row.n <= std::uint64_t{row.h} * top, tag + ": bound at h=" + str(row.h));
      if (row.h > 1) {
        const auto& prev = rows[row.h - 2];
        f.expect(row.n >= prev.n, tag + ": monotone at h=" + str(row.h));
        if (prev.n >= top) f.expect(row.n >= prev.n + top, tag + ": step at h=" + str(row.h));
      }
      if (row.saturated && !first_sat) first_sat = row.h;
    }
    if (first_sat) {
      for (StampCount h = *first_sat; h <= std::min<StampCount>(*first_sat + 3, kHMax); ++h)
        f.expect(rows[h - 1].saturated, tag + ": saturation lost at h=" + str(h));
      // Beyond the profile window as well.
      for (StampCount h = *first_sat + 1; h <= *first_sat + 3; ++h)
        f.expect(cover(b, h) == std::uint64_t{h} * top, tag + ": saturation lost at h=" + str(h));
    }

    const StampCount h = 1 + rng() % 6;
    MinStampTable table(b, std::uint64_t{h} * top);
    const std::uint64_t x = rng() % (table.bound() + 1);
    if (table[x] <= h) {
      auto g = find_generation(b, x, h);
      f.expect(g.consistent_with(b) && g.value == x && g.weight <= h && g.weight == table[x],
               tag + ": generation of " + str(x));
    } else {
      bool threw = false;
      try {
        find_generation(b, x, h);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::NotRepresentable;
      }
      f.expect(threw, tag + ": " + str(x) + " should be NotRepresentable");
    }
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Findings& f) {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "postage_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "4", "1", "4"}) {
    const auto path = dir / (std::string("scan_") + threads + "_" + str(outputs.size()) + ".jsonl");
    std::ostringstream out, err;
    int code = cli::run({"scan", "--k-min", "1", "--k", "7", "--ak-max", "30", "--threads", threads,
                         "--out", path.string()},
                        out, err);
    f.expect(code == 0 || code == 5, "scan exit code " + str(code) + ": " + err.str());
    outputs.push_back(slurp(path));
  }
  f.expect(!outputs[0].empty(), "empty scan output");
  for (std::size_t i = 1; i < outputs.size(); ++i)
    f.expect(outputs[i] == outputs[0], "run " + str(i) + " differs from run 0");
  fs::remove_all(dir);
}

struct Criterion {
  const char* name;
  std::function<void(Findings&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 golden paper values", golden_values},
      {"2 family claim h0 = p, h1 = p + 1", family_claim},
      {"3 reflection lemma, symmetric k <= 7, a_k <= 40", lemma_suite},
      {"4 theorem bound and stitched range, same box", theorem_suite},
      {"5 no counterexample for symmetric k <= 5, a_k <= 30", conjecture_scan},
      {"6 cover == brute force, k <= 4, a_k <= 12, h <= 4", oracle_equivalence},
      {"7 core invariants, 1000 random bases", core_invariants},
      {"8 scan output identical for --threads 1 and 4", determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Findings findings;
    auto start = Clock::now();
    try {
      c.run(findings);
    } catch (const std::exception& e) {
      findings.expect(false, std::string("uncaught: ") + e.what());
    }
    const auto ms = millis_since(start);
    std::printf("[%s] %s (%.1f ms)\n", findings.ok() ? "PASS" : "FAIL", c.name, ms);
    if (!findings.ok()) {
      std::printf("      %s\n", findings.summary().c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
