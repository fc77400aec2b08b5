#include <benchmark/benchmark.h>

#include <random>

#include "kdecoreset/discrepancy.hpp"
#include "kdecoreset/rng.hpp"
#include "kdecoreset/synthetic.hpp"

using namespace kdecoreset;

namespace {
Coloring balanced(std::size_t n, std::uint64_t seed) {
  Coloring chi;
  chi.signs.assign(n, 1);
  for (std::size_t i = 0; i < n / 2; ++i) chi.signs[i] = -1;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(chi.signs[i - 1], chi.signs[next_below(rng, i)]);
  return chi;
}
}  // namespace

static void BM_RectExact2d(benchmark::State& state) {
  const PointSet p = uniform_box(state.range(0), 2, 5);
  const Coloring chi = balanced(state.range(0), 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(rectangle_discrepancy(p, chi, DiscrepancyMode::exact_mode()).value);
}
BENCHMARK(BM_RectExact2d)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_RectSampled(benchmark::State& state) {
  const PointSet p = uniform_box(state.range(0), 2, 5);
  const Coloring chi = balanced(state.range(0), 9);
  const auto mode = DiscrepancyMode::sampled(4 * state.range(0) * state.range(0), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(rectangle_discrepancy(p, chi, mode).value);
}
BENCHMARK(BM_RectSampled)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_KernelDiscrepancy(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = uniform_box(state.range(0), 2, 5);
  const Coloring chi = balanced(state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_discrepancy(p, chi, k, 5).value);
}
BENCHMARK(BM_KernelDiscrepancy)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_HalvingCoreset1d(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = uniform_box(state.range(0), 1, 7, 4.0);
  HalvingOptions opts;
  opts.strategy = ColoringStrategy::alt1d;
  for (auto _ : state) {
    auto [coreset, report] = halving_coreset(p, k, 0.1, opts);
    benchmark::DoNotOptimize(report.total_bound);
  }
}
BENCHMARK(BM_HalvingCoreset1d)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
