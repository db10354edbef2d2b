#include <benchmark/benchmark.h>

#include <random>

#include "support/generators.hpp"
#include "themeorder/analysis.hpp"
#include "themeorder/fisher.hpp"

namespace {

using namespace themeorder;

void BM_DistanceMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto set = testing::random_ordering_set(rng, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(set));
}
BENCHMARK(BM_DistanceMatrix)->Arg(10)->Arg(26);

void BM_ClusterBlocks(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto set = testing::random_ordering_set(rng, static_cast<std::size_t>(state.range(0)), 10);
  const auto matrix = distance_matrix(set);
  const auto linkage = static_cast<Linkage>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_blocks(matrix, ClusterCount{4}, linkage));
}
BENCHMARK(BM_ClusterBlocks)->ArgsProduct({{10, 26}, {0, 1}});

void BM_KendallTau(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto set = testing::random_ordering_set(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau_distance(set.orderings[0], set.orderings[1]));
}
BENCHMARK(BM_KendallTau)->Arg(10)->Arg(26);

void BM_FisherExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fisher_exact_one_sided({n, n / 3, n / 2, n}));
}
BENCHMARK(BM_FisherExact)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace
