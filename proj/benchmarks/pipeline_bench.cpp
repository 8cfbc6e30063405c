#include <benchmark/benchmark.h>

#include "sparsehalf/generators.hpp"
#include "sparsehalf/pipeline.hpp"

using namespace sparsehalf;

static void BM_SparseHalfTuran(benchmark::State& state) {
  const Graph g = gen::turan(3, static_cast<std::size_t>(state.range(0)));
  SparseHalfOptions opts;
  opts.oracle_threshold = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_sparse_half(g, opts).best.achieved);
}
BENCHMARK(BM_SparseHalfTuran)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_SparseHalfPetersenBlowUp(benchmark::State& state) {
  const Graph g = gen::blow_up(gen::petersen(), static_cast<std::size_t>(state.range(0)));
  SparseHalfOptions opts;
  opts.oracle_threshold = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_sparse_half(g, opts).best.achieved);
}
BENCHMARK(BM_SparseHalfPetersenBlowUp)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
