#include <benchmark/benchmark.h>

#include "wordmaps/builtins.hpp"
#include "wordmaps/omega.hpp"

namespace {

void BM_ClosureS3(benchmark::State& state) {
  const auto g = wordmaps::symmetric_group(3);
  wordmaps::ClosureLimits limits;
  limits.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wordmaps::omega_exact(g, 2, limits));
}
BENCHMARK(BM_ClosureS3)->Arg(1)->Arg(4);

void BM_ClosureQ8d3(benchmark::State& state) {
  const auto g = wordmaps::quaternion_group();
  for (auto _ : state) benchmark::DoNotOptimize(wordmaps::omega_exact(g, 3));
}
BENCHMARK(BM_ClosureQ8d3);

void BM_ClosureS3d3Capped(benchmark::State& state) {
  const auto g = wordmaps::symmetric_group(3);
  wordmaps::ClosureLimits limits;
  limits.closure_cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wordmaps::omega_exact(g, 3, limits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClosureS3d3Capped)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace
