#include <benchmark/benchmark.h>

#include "kswap/micro_solver.hpp"
#include "kswap/random_graph.hpp"

namespace {

void BM_TableBuild(benchmark::State& state) {
  for (auto _ : state) {
    kswap::MicroTable table(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(table.bytes().data());
  }
}
BENCHMARK(BM_TableBuild)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);

void BM_Lookup(benchmark::State& state) {
  const auto& table = kswap::default_micro_table();
  const auto g = kswap::gen_random(64, 0.5, 3);
  const std::vector<kswap::Vertex> chunk = {3, 17, 22, 40, 51, 63};
  for (auto _ : state) benchmark::DoNotOptimize(kswap::lookup(table, g, chunk));
}
BENCHMARK(BM_Lookup);

// range(0) = order, range(1) = density in percent
void BM_FvsQe(benchmark::State& state) {
  const auto& table = kswap::default_micro_table();
  const auto g = kswap::gen_random(static_cast<std::size_t>(state.range(0)), state.range(1) / 100.0, 7);
  const auto sg = g.all_vertices();
  for (auto _ : state) benchmark::DoNotOptimize(kswap::fvs_qe(table, g, sg));
}
BENCHMARK(BM_FvsQe)->ArgsProduct({{250, 500, 1000}, {10, 50, 90}})->Unit(benchmark::kMicrosecond);

}  // namespace
