#include <benchmark/benchmark.h>

#include <random>

#include "wordmaps/normal_form.hpp"
#include "wordmaps/verify.hpp"

namespace {

void BM_NormalForm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<std::uint32_t>(state.range(1));
  auto fn = wordmaps::free_nilpotent_group(d, c);
  std::mt19937_64 rng(1);
  std::vector<wordmaps::Word> words;
  for (int k = 0; k < 64; ++k) words.push_back(wordmaps::random_word(rng, d, 30, 5));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fn->normal_form(words[k++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Args({3, 4});

void BM_MagnusPeel(benchmark::State& state) {
  auto fn = wordmaps::free_nilpotent_group(3, 3);
  std::mt19937_64 rng(2);
  const auto w = wordmaps::random_word(rng, 3, 30, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fn->from_series(wordmaps::magnus_image(w, 3, 3)));
}
BENCHMARK(BM_MagnusPeel);

}  // namespace
