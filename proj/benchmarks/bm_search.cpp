#include <benchmark/benchmark.h>

#include "kswap/heuristics.hpp"
#include "kswap/local_search.hpp"
#include "kswap/random_graph.hpp"

namespace {

constexpr std::uint64_t kSeed = 11;

// range(0) = heuristic index, range(1) = order, range(2) = density in percent
void BM_Heuristic(benchmark::State& state) {
  const auto kind = kswap::kAllHeuristics[state.range(0)];
  const auto g = kswap::gen_random(static_cast<std::size_t>(state.range(1)), state.range(2) / 100.0, kSeed);
  const auto sg = g.all_vertices();
  state.SetLabel(std::string(kswap::heuristic_name(kind)));
  for (auto _ : state) benchmark::DoNotOptimize(kswap::run_heuristic(kind, g, sg));
}
BENCHMARK(BM_Heuristic)->ArgsProduct({{0, 1, 2, 3, 4}, {250, 750}, {10, 50, 90}})->Unit(benchmark::kMicrosecond);

void BM_LocalSearch(benchmark::State& state) {
  const auto kind = kswap::kAllHeuristics[state.range(0)];
  const auto g = kswap::gen_random(static_cast<std::size_t>(state.range(1)), state.range(2) / 100.0, kSeed);
  const auto sg = g.all_vertices();
  const auto& table = kswap::default_micro_table();
  state.SetLabel("ls_1_k_" + std::string(kswap::heuristic_name(kind)));
  std::size_t swaps = 0;
  for (auto _ : state) {
    const auto r = kswap::ls_1_k(table, g, sg, kind);
    swaps = r.iterations;
    benchmark::DoNotOptimize(r.clique);
  }
  state.counters["swaps"] = static_cast<double>(swaps);
}
BENCHMARK(BM_LocalSearch)->ArgsProduct({{0, 1, 2, 3, 4}, {250, 750}, {10, 50, 90}})->Unit(benchmark::kMicrosecond);

void BM_BuildCandidates(benchmark::State& state) {
  const auto g = kswap::gen_random(static_cast<std::size_t>(state.range(0)), 0.5, kSeed);
  const auto sg = g.all_vertices();
  const auto q = kswap::ld_bin(g, sg);
  for (auto _ : state) benchmark::DoNotOptimize(kswap::build_candidates(g, sg, q));
}
BENCHMARK(BM_BuildCandidates)->Arg(250)->Arg(750)->Arg(1500)->Unit(benchmark::kMicrosecond);

}  // namespace
