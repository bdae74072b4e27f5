#include <benchmark/benchmark.h>

#include "wordmaps/admissible.hpp"
#include "wordmaps/builtins.hpp"
#include "wordmaps/word_map.hpp"

namespace {

void BM_WordMapTable(benchmark::State& state) {
  const auto g = wordmaps::symmetric_group(4);
  const auto w = wordmaps::parse_word("[x1, x2, x3]^2 x1^3");
  for (auto _ : state) benchmark::DoNotOptimize(wordmaps::word_map_table(w, g, 3));
  state.SetItemsProcessed(state.iterations() * 24 * 24 * 24);
}
BENCHMARK(BM_WordMapTable);

void BM_AdmissibleS3(benchmark::State& state) {
  const auto g = wordmaps::symmetric_group(3);
  for (auto _ : state) {
    for (const auto& f : wordmaps::enumerate_admissible(g, 2))
      benchmark::DoNotOptimize(wordmaps::word_map_table(wordmaps::build_admissible_word(f), g, 2));
  }
}
BENCHMARK(BM_AdmissibleS3);

}  // namespace
