#include <benchmark/benchmark.h>

#include <map>

#include "bigen/metrics.hpp"
#include "support/test_graphs.hpp"

namespace {

const bigen::BipartiteGraph& skewed(std::int64_t draws) {
  static std::map<std::int64_t, bigen::BipartiteGraph> cache;
  auto it = cache.find(draws);
  if (it == cache.end()) {
    const auto n = static_cast<bigen::NodeIndex>(draws / 8);
    it = cache.emplace(draws, bigen::testing::random_skewed(n, n / 2 + 1, static_cast<std::uint64_t>(draws), 1)).first;
  }
  return it->second;
}

void BM_CountButterflies(benchmark::State& state) {
  const auto& g = skewed(state.range(0));
  const bigen::MetricsOptions opts{.threads = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(bigen::count_butterflies(g, opts));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_CountButterflies)->ArgsProduct({{1 << 14, 1 << 17, 1 << 20}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_ButterfliesPerEdge(benchmark::State& state) {
  const auto& g = skewed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bigen::butterflies_per_edge(g, {.threads = 1}));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_ButterfliesPerEdge)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

void BM_MeasureMetamorphosis(benchmark::State& state) {
  const auto& g = skewed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bigen::measure_metamorphosis(g, {.threads = 1}));
}
BENCHMARK(BM_MeasureMetamorphosis)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto g = bigen::testing::random_bipartite(30, 30, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bigen::butterfly_oracle(g));
}
BENCHMARK(BM_Oracle);

}  // namespace
