// Serial reference vs OpenMP kernels on random integer data.
//
//   ./build/bench/bench_kernels --benchmark_filter=Shapley

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "coalition_forge/kernels.hpp"

namespace cf = coalition_forge;

namespace {

std::vector<cf::Rational> random_dense(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<cf::Rational> v(std::size_t{1} << n);
  for (std::size_t m = 1; m < v.size(); ++m) v[m] = d(rng);
  return v;
}

void random_supports(int n, int k, unsigned seed, std::vector<cf::Coalition>& supports,
                     std::vector<cf::Rational>& coeffs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<cf::Coalition::Mask> sets(1, (cf::Coalition::Mask{1} << n) - 1);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < k; ++i) {
    supports.emplace_back(sets(rng));
    coeffs.emplace_back(d(rng));
  }
}

std::vector<cf::Rational> random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<cf::Rational> m(rows * cols);
  for (auto& x : m) x = d(rng);
  m[0] = 1;
  return m;
}

template <auto Kernel>
void BM_Shapley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dense = random_dense(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(dense, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dense.size()));
}

template <auto Kernel>
void BM_MeetExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<cf::Coalition> supports;
  std::vector<cf::Rational> coeffs;
  random_supports(n, 32, 11, supports, coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(supports, coeffs, n));
}

template <auto Kernel>
void BM_Eliminate(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto base = random_matrix(size, size, 13);
  for (auto _ : state) {
    state.PauseTiming();
    auto m = base;
    state.ResumeTiming();
    Kernel(m, size, 0, 0, 0, size);
    benchmark::DoNotOptimize(m.data());
  }
}

}  // namespace

BENCHMARK(BM_Shapley<cf::kernels::serial::shapley>)->Name("Shapley/serial")->DenseRange(10, 16, 2);
BENCHMARK(BM_Shapley<cf::kernels::shapley>)->Name("Shapley/parallel")->DenseRange(10, 16, 2)->UseRealTime();
BENCHMARK(BM_MeetExtension<cf::kernels::serial::meet_extension>)->Name("MeetExtension/serial")->DenseRange(10, 16, 2);
BENCHMARK(BM_MeetExtension<cf::kernels::meet_extension>)
    ->Name("MeetExtension/parallel")
    ->DenseRange(10, 16, 2)
    ->UseRealTime();
BENCHMARK(BM_Eliminate<cf::kernels::serial::eliminate>)->Name("Eliminate/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_Eliminate<cf::kernels::eliminate>)
    ->Name("Eliminate/parallel")
    ->RangeMultiplier(2)
    ->Range(64, 512)
    ->UseRealTime();

BENCHMARK_MAIN();
