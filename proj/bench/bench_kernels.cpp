// Serial vs OpenMP kernels, plus the end-to-end pipeline.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zhou/decompose.hpp"
#include "zhou/kernels.hpp"
#include "zhou/matz.hpp"
#include "zhou/oracle.hpp"

namespace {

using zhou::u64;

std::vector<u64> random_entries(std::size_t d, u64 m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<u64> v(d * d);
  for (auto& x : v) x = rng() % m;
  return v;
}

template <auto Kernel>
void BM_Mul(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const u64 m = static_cast<u64>(state.range(1));
  const auto a = random_entries(d, m, 1), b = random_entries(d, m, 2);
  std::vector<u64> c(d * d);
  for (auto _ : state) {
    Kernel(a, b, c, d, m);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(d * d * d));
}

void mul_args(benchmark::internal::Benchmark* b) {
  for (long long d : {32, 64, 128, 256})
    for (long long m : {360LL, (1LL << 40) + 15}) b->Args({d, m});
}

BENCHMARK(BM_Mul<zhou::kernels::mul_serial>)->Name("mul/serial")->Apply(mul_args);
BENCHMARK(BM_Mul<zhou::kernels::mul_parallel>)->Name("mul/parallel")->Apply(mul_args);

template <auto Enumerate>
void BM_Tripotents(benchmark::State& state) {
  const u64 m = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Enumerate(m, 2, zhou::oracle::kDefaultBudget));
}

BENCHMARK(BM_Tripotents<zhou::oracle::enumerate_tripotents_serial>)
    ->Name("tripotents/serial")
    ->Arg(12)
    ->Arg(30)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tripotents<zhou::oracle::enumerate_tripotents>)
    ->Name("tripotents/parallel")
    ->Arg(12)
    ->Arg(30)
    ->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const u64 m = static_cast<u64>(state.range(1));
  const auto entries = random_entries(d, m, 3);
  zhou::MatZ a(m, d);
  for (std::size_t i = 0; i < d * d; ++i) a.set(i / d, i % d, entries[i]);
  for (auto _ : state) benchmark::DoNotOptimize(zhou::decompose_matrix(a));
}

BENCHMARK(BM_Decompose)
    ->Args({4, 360})
    ->Args({16, 360})
    ->Args({64, 360})
    ->Args({32, 1LL << 20})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
