#include <benchmark/benchmark.h>

#include "sparsehalf/certify.hpp"

using namespace sparsehalf;

static void certify(benchmark::State& state, const char* id) {
  const CertifiedFunction& f = certified_function(id);
  std::size_t boxes = 0;
  for (auto _ : state) boxes = certify_sign(f).boxes.size();
  state.counters["boxes"] = static_cast<double>(boxes);
}
BENCHMARK_CAPTURE(certify, h, "h")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(certify, k, "k")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(certify, ell, "ell")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(certify, m, "m")->Unit(benchmark::kMillisecond);

static void BM_ReplayEll(benchmark::State& state) {
  const SignCertificate cert = certify_sign(certified_function("ell"));
  for (auto _ : state) benchmark::DoNotOptimize(replay(cert).proved);
}
BENCHMARK(BM_ReplayEll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
