#include <benchmark/benchmark.h>

#include "permcover/cyclic_code.hpp"
#include "permcover/oracle.hpp"
#include "permcover/relabel.hpp"

namespace {

void BM_OracleGn(benchmark::State& state) {
  const auto code = permcover::CyclicGroupCode(static_cast<std::size_t>(state.range(0))).to_explicit();
  const permcover::OracleOptions options{12, 1};
  for (auto _ : state) benchmark::DoNotOptimize(permcover::covering_radius_bruteforce(code, options));
}
BENCHMARK(BM_OracleGn)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);

void BM_OracleDn(benchmark::State& state) {
  const auto code = permcover::dihedral_dn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permcover::covering_radius_bruteforce(code));
}
BENCHMARK(BM_OracleDn)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_BallSizeDp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(permcover::ball_size_dp(n, r));
}
BENCHMARK(BM_BallSizeDp)->Args({20, 2})->Args({40, 3})->Args({60, 4})->Args({100, 5});

void BM_ScanRelabelings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permcover::scan_relabelings(n));
}
BENCHMARK(BM_ScanRelabelings)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
