#include <benchmark/benchmark.h>

#include "kdecoreset/herding.hpp"
#include "kdecoreset/synthetic.hpp"

using namespace kdecoreset;

static void BM_HerdingStep(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = gaussian_mixture(state.range(0), 3, 11);
  HerdingState herding(p, k);
  herding.select_first();
  for (auto _ : state) benchmark::DoNotOptimize(herding.step());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HerdingStep)->Arg(500)->Arg(2000)->Arg(8000);

static void BM_HerdT128(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = gaussian_mixture(state.range(0), 3, 13);
  for (auto _ : state) {
    const HerdingResult r = herd(p, k, HerdingStop::by_steps(128));
    benchmark::DoNotOptimize(r.distinct_size);
  }
}
BENCHMARK(BM_HerdT128)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_MeanPrecompute(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = gaussian_mixture(state.range(0), 3, 17);
  for (auto _ : state) {
    HerdingState herding(p, k);
    benchmark::DoNotOptimize(herding.self_similarity());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_MeanPrecompute)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
