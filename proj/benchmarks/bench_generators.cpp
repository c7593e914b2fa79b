#include <benchmark/benchmark.h>

#include "bigen/generators.hpp"
#include "support/test_graphs.hpp"

namespace {

struct Source {
  bigen::DegreeTarget targets;
  bigen::DegreeProfiles profile;
};

Source make_source(std::int64_t draws) {
  const auto n = static_cast<bigen::NodeIndex>(draws / 4);
  const auto g = bigen::testing::random_skewed(n, n, static_cast<std::uint64_t>(draws), 3);
  return {g.degrees(), bigen::metamorphosis_per_degree(g)};
}

void BM_FastChungLu(benchmark::State& state) {
  const auto src = make_source(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bigen::fast_bipartite_cl(src.targets, {.seed = seed++}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(src.targets.sum_u()));
}
BENCHMARK(BM_FastChungLu)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_BipartiteBter(benchmark::State& state) {
  const auto src = make_source(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bigen::bipartite_bter(src.targets, src.profile.u, src.profile.v, {.seed = seed++}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(src.targets.sum_u()));
}
BENCHMARK(BM_BipartiteBter)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_DiscreteSampler(benchmark::State& state) {
  std::vector<double> w(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = 1.0 + static_cast<double>(k % 97);
  const bigen::DiscreteSampler sampler(w);
  bigen::UniformStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng.next()));
}
BENCHMARK(BM_DiscreteSampler)->Arg(1 << 10)->Arg(1 << 20);

}  // namespace
