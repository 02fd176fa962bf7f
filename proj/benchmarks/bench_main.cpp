#include <benchmark/benchmark.h>

#include "kantichain/builder.hpp"
#include "kantichain/lemma.hpp"
#include "kantichain/monotone.hpp"
#include "kantichain/poset.hpp"
#include "kantichain/sampling.hpp"

using namespace kantichain;

static void BM_LongestChain(benchmark::State& state) {
  UniformSampler rng(1);
  std::vector<RealPoint> pts;
  for (long i = 0; i < state.range(0); ++i) pts.push_back(RealPoint{rng.next(), rng.next(), rng.next()});
  const PointSet s(3, pts);
  for (auto _ : state) benchmark::DoNotOptimize(longest_chain(s).length);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongestChain)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_BruteForceMax(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(4, state.range(0)));
}
BENCHMARK(BM_BruteForceMax)->DenseRange(1, 4);

static void BM_InscribedExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(inscribed_length_exact(SalemParams{0.25}, state.range(0)).lower);
}
BENCHMARK(BM_InscribedExact)->RangeMultiplier(8)->Range(64, 1 << 18);

static void BM_InscribedSampled(benchmark::State& state) {
  const auto f = salem_decreasing(SalemParams{0.25});
  for (auto _ : state) benchmark::DoNotOptimize(inscribed_length_sampled(f, state.range(0)).lower);
}
BENCHMARK(BM_InscribedSampled)->DenseRange(8, 16, 4);

static void BM_LemmaPipeline(benchmark::State& state) {
  const auto e = EnvelopePair::make(superellipse(1), superellipse(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_lemma(e, {}, SalemParams{kDefaultGluingP}, 64).length.lower);
  }
}
BENCHMARK(BM_LemmaPipeline)->Unit(benchmark::kMillisecond);

static void BM_Build(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build(state.range(0)).total_length.lower);
}
BENCHMARK(BM_Build)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
