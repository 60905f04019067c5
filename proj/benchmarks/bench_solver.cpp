#include <benchmark/benchmark.h>

#include "nsd/families.hpp"
#include "nsd/solver.hpp"
#include "nsd/weighters.hpp"

namespace {

using namespace nsd;

void BM_ExactChiGraphCycle(benchmark::State& state) {
  const Hypergraph h = tight_cycle(2, 1, static_cast<std::size_t>(state.range(0)));
  SearchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi(h, cfg).value);
}
BENCHMARK(BM_ExactChiGraphCycle)->DenseRange(6, 14, 2);

void BM_ExactChiFano(benchmark::State& state) {
  const Hypergraph h = projective_plane(2).hypergraph;
  SearchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi(h, cfg).value);
}
BENCHMARK(BM_ExactChiFano);

void BM_ExactChiThreePartiteFullTotal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Hypergraph h = complete_multipartite({n, n, n - 1}).hypergraph;
  SearchConfig cfg;
  cfg.mode = SigmaMode::full_total;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi(h, cfg).value);
}
BENCHMARK(BM_ExactChiThreePartiteFullTotal)->DenseRange(2, 4);

void BM_Sigma(benchmark::State& state) {
  const Hypergraph h = complete_uniform(static_cast<std::size_t>(state.range(0)), 3);
  const Weighting w = Weighting::constant(h, SigmaMode::full_total);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(h, w, SigmaMode::full_total));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * h.edge_count()));
}
BENCHMARK(BM_Sigma)->Arg(10)->Arg(20);

void BM_WeightKnrt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PartitionedHypergraph g = complete_npartite_uniform(n, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weight_knrt(g, 3, 2));
}
BENCHMARK(BM_WeightKnrt)->Arg(10)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
