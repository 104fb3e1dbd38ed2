#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "permcover/composed_code.hpp"
#include "permcover/cyclic_code.hpp"

namespace {

permcover::Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<permcover::Value> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(image.begin(), image.end(), rng);
  return permcover::Permutation(std::move(image));
}

void BM_CoverCodeword(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = random_permutation(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(permcover::cover_codeword(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoverCodeword)->RangeMultiplier(2)->Range(1 << 15, 1 << 20)->Complexity(benchmark::oN);

void BM_CoverCodewordAnchor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = random_permutation(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(permcover::cover_codeword_anchor(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoverCodewordAnchor)->RangeMultiplier(2)->Range(1 << 15, 1 << 20)->Complexity(benchmark::oN);

void BM_CoverComposed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = permcover::ComposedCodeSpec::uniform(n, 64, permcover::BlockKind::cyclic,
                                                         permcover::BlockKind::cyclic);
  const auto f = random_permutation(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(permcover::cover_codeword_composed(f, spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoverComposed)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

}  // namespace
