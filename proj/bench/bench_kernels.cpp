// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "asmenum/counting.hpp"
#include "asmenum/sixvertex.hpp"

namespace {

using namespace asmenum;

SpectralParams sample_params(int n) {
  auto params = zero_params(n);
  for (int k = 0; k < n; ++k) {
    params.xs[static_cast<std::size_t>(k)] = 0.05 * (k + 1);
    params.ys[static_cast<std::size_t>(k)] = -0.03 * k;
  }
  return params;
}

void BM_PartitionSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& lattice = ice_lattice(n);
  const auto params = sample_params(n);
  for (auto _ : state) benchmark::DoNotOptimize(lattice.partition_function_serial(params));
}

void BM_PartitionParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& lattice = ice_lattice(n);
  const auto params = sample_params(n);
  for (auto _ : state) benchmark::DoNotOptimize(lattice.partition_function(params));
}

void BM_TopBottomSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(doubly_topbottom_brute_serial(static_cast<int>(state.range(0))));
}

void BM_TopBottomParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(doubly_topbottom_brute(static_cast<int>(state.range(0))));
}

// Fresh cache per iteration so the whole DP is timed.
void BM_TopTwoSerial(benchmark::State& state) {
  for (auto _ : state) {
    AlphaCache cache;
    benchmark::DoNotOptimize(doubly_top_brute_serial(static_cast<int>(state.range(0)), cache));
  }
}

void BM_TopTwoParallel(benchmark::State& state) {
  for (auto _ : state) {
    AlphaCache cache;
    benchmark::DoNotOptimize(doubly_top_brute(static_cast<int>(state.range(0)), cache));
  }
}

}  // namespace

BENCHMARK(BM_PartitionSerial)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_PartitionParallel)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_TopBottomSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TopBottomParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TopTwoSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TopTwoParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
