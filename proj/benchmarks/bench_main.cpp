#include <benchmark/benchmark.h>

#include "lorenz/atlas.hpp"
#include "lorenz/braid.hpp"
#include "lorenz/jones.hpp"
#include "lorenz/modular.hpp"
#include "lorenz/tlink.hpp"
#include "lorenz/words.hpp"

namespace {

using namespace lorenz;

void BM_enumerate(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_length(n));
}
BENCHMARK(BM_enumerate)->Arg(12)->Arg(16)->Arg(18);

void BM_braid_of_words(benchmark::State& state)
{
  const auto words = enumerate_length(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) {
      LinkWords link{{w}};
      benchmark::DoNotOptimize(braid_of_words(link));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_braid_of_words)->Arg(10)->Arg(14);

// Torus braid sigma_1 ... sigma_{p-1} repeated q times; c = q (p - 1).
void BM_bracket_state_sum(benchmark::State& state)
{
  const auto word = t_braid_word(TLinkParams({{3, static_cast<int>(state.range(0))}}));
  for (auto _ : state)
    benchmark::DoNotOptimize(kauffman_bracket(word));
  state.counters["crossings"] = static_cast<double>(word.generators.size());
}
BENCHMARK(BM_bracket_state_sum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_word_of_matrix(benchmark::State& state)
{
  std::vector<Mat2Z> mats;
  for (const auto& w : enumerate_length(static_cast<std::size_t>(state.range(0))))
    if (w.has_both_letters())
      mats.push_back(matrix_of_word(w));
  for (auto _ : state)
    for (const auto& m : mats)
      benchmark::DoNotOptimize(word_of_matrix(m));
}
BENCHMARK(BM_word_of_matrix)->Arg(10);

void BM_atlas(benchmark::State& state)
{
  AtlasOptions opts;
  opts.max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(atlas_records(opts));
}
BENCHMARK(BM_atlas)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
