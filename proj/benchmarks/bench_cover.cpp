#include <benchmark/benchmark.h>

#include "postage/postage.hpp"

using namespace postage;

static void BM_CoverA10(benchmark::State& state) {
  const auto basis = family_a10(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cover(basis, static_cast<StampCount>(state.range(0) + 1)));
}
BENCHMARK(BM_CoverA10)->DenseRange(5, 11, 2);

static void BM_MinStampTable(benchmark::State& state) {
  const Basis basis({1, 3, 5, 8, 20, 23, 25, 27, 28});
  for (auto _ : state) {
    MinStampTable table(basis, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(table[table.bound()]);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MinStampTable)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

static void BM_AnalyzeFamilyA9(benchmark::State& state) {
  const auto basis = family_a9(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(basis));
}
BENCHMARK(BM_AnalyzeFamilyA9)->DenseRange(3, 9, 2);

static void BM_BruteForceCover(benchmark::State& state) {
  const Basis basis({1, 3, 6, 10});
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_cover(basis, static_cast<StampCount>(state.range(0))));
}
BENCHMARK(BM_BruteForceCover)->DenseRange(2, 8, 2);

static void BM_ScanSymmetric(benchmark::State& state) {
  ScanSpec spec;
  spec.k_min = 1;
  spec.k_max = static_cast<std::size_t>(state.range(0));
  spec.ak_max = 30;
  for (auto _ : state) {
    auto summary = scan_conjecture(spec, [](const ScanRecord&) { return true; });
    benchmark::DoNotOptimize(summary.scanned);
  }
}
BENCHMARK(BM_ScanSymmetric)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_Extremal(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(search_extremal(static_cast<StampCount>(state.range(0)), 4).n_star);
}
BENCHMARK(BM_Extremal)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
