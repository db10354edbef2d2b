#include <benchmark/benchmark.h>

#include <random>

#include "support/generators.hpp"
#include "themeorder/augmented.hpp"
#include "themeorder/chrono.hpp"
#include "themeorder/majority.hpp"

namespace {

using namespace themeorder;

Corpus make_corpus(std::size_t docs, std::size_t themes) {
  std::mt19937_64 rng(docs * 131 + themes);
  return testing::random_corpus(rng, {docs, 40, themes, 0.15});
}

void BM_GreedyLinearize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = testing::random_graph(rng, static_cast<std::size_t>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_linearize(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyLinearize)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_BruteForceOptimal(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto g = testing::random_graph(rng, static_cast<std::size_t>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimal(g));
}
BENCHMARK(BM_BruteForceOptimal)->DenseRange(4, 8);

void BM_MajorityOrder(benchmark::State& state) {
  const Corpus c = make_corpus(20, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(majority_order(c));
}
BENCHMARK(BM_MajorityOrder)->Arg(10)->Arg(40)->Arg(160);

void BM_ChronologicalOrder(benchmark::State& state) {
  const Corpus c = make_corpus(20, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chronological_order(c));
}
BENCHMARK(BM_ChronologicalOrder)->Arg(10)->Arg(40)->Arg(160);

void BM_AugmentedOrder(benchmark::State& state) {
  const Corpus c = make_corpus(20, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(augmented_order(c));
}
BENCHMARK(BM_AugmentedOrder)->Arg(10)->Arg(40)->Arg(160);

}  // namespace
