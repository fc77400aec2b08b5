#include <benchmark/benchmark.h>

#include "kdecoreset/kde.hpp"
#include "kdecoreset/kernel.hpp"
#include "kdecoreset/synthetic.hpp"

using namespace kdecoreset;

static void BM_ProfileGaussian(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  double z = 0.0;
  for (auto _ : state) {
    z += 1e-6;
    benchmark::DoNotOptimize(profile(k, z));
  }
}
BENCHMARK(BM_ProfileGaussian);

static void BM_EvalPair(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = uniform_box(2, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eval(k, p.point(0), p.point(1)));
}
BENCHMARK(BM_EvalPair)->Arg(2)->Arg(8)->Arg(32);

static void BM_Kde(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = uniform_box(state.range(0), 3, 7);
  const std::vector<double> x{0.5, 0.5, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(kde(p, k, x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Kde)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_Similarity(benchmark::State& state) {
  const Kernel k(KernelFamily::gaussian, 1.0);
  const PointSet p = uniform_box(state.range(0), 3, 7);
  const PointSet q = uniform_box(state.range(0), 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(similarity(p, q, k));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Similarity)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
