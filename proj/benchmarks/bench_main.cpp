#include <benchmark/benchmark.h>

#include "gonlab/expansion.hpp"
#include "gonlab/gonality.hpp"
#include "gonlab/randgraph.hpp"
#include "gonlab/reduction.hpp"
#include "gonlab/spectral.hpp"

using namespace gonlab;

namespace {

Multigraph cubic(int n, std::uint64_t seed) {
  ConfigModelParams p;
  p.k = 3;
  p.n = n;
  p.seed = seed;
  return sample_configuration(p);
}

void BM_DharBurn(benchmark::State& state) {
  const auto g = cubic(static_cast<int>(state.range(0)), 1);
  const auto d = Divisor::point(g, 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(dhar_burn(d, 0));
}
BENCHMARK(BM_DharBurn)->Arg(100)->Arg(1000);

void BM_VReduce(benchmark::State& state) {
  const auto g = cubic(static_cast<int>(state.range(0)), 2);
  auto d = Divisor::point(g, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(v_reduce(d, 0));
}
BENCHMARK(BM_VReduce)->Arg(50)->Arg(200);

void BM_PappusCheegerProfile(benchmark::State& state) {
  const auto g = pappus_graph();
  CheegerOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cheeger_profile(g, opts));
}
BENCHMARK(BM_PappusCheegerProfile)->Unit(benchmark::kMillisecond);

void BM_AlgebraicConnectivity(benchmark::State& state) {
  const auto g = cubic(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_connectivity(g));
}
BENCHMARK(BM_AlgebraicConnectivity)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PappusGonality(benchmark::State& state) {
  const auto g = pappus_graph();
  GonalityOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_gonality(g, opts));
}
BENCHMARK(BM_PappusGonality)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
