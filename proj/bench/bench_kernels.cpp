// Serial reference vs OpenMP kernel, same inputs; a mismatch aborts the run.
#include <benchmark/benchmark.h>

#include <random>

#include "splinedim/spline_space.hpp"

using namespace splinedim;

namespace {

constexpr std::uint64_t kPrime = 4294967291ULL;

// n x n product of n x (n - 4) and (n - 4) x n random matrices: rank n - 4.
IntegerMatrix low_rank(std::size_t n, int range) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-range, range);
  const std::size_t inner = n - 4;
  std::vector<std::vector<int>> a(n, std::vector<int>(inner));
  std::vector<std::vector<int>> b(inner, std::vector<int>(n));
  for (auto& row : a) for (auto& x : row) x = d(rng);
  for (auto& row : b) for (auto& x : row) x = d(rng);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t t = 0; t < inner; ++t) s += static_cast<long long>(a[i][t]) * b[t][j];
      m.at(i, j) = static_cast<long>(s);
    }
  }
  return m;
}

void expect(benchmark::State& state, std::size_t got, std::size_t want) {
  if (got != want) state.SkipWithError("serial and parallel ranks differ");
}

template <bool Parallel>
void BM_bareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = low_rank(n, 9);
  for (auto _ : state) {
    const auto r = Parallel ? bareiss_rank_parallel(m) : bareiss_rank(m);
    expect(state, r, n - 4);
  }
}

template <bool Parallel>
void BM_modular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = reduce(low_rank(n, 1000), kPrime);
  for (auto _ : state) {
    state.PauseTiming();
    ModMatrix m = base;
    state.ResumeTiming();
    const auto r = Parallel ? modular_rank_parallel(m) : modular_rank(m);
    expect(state, r, n - 4);
  }
}

template <bool Parallel>
void BM_conformality(benchmark::State& state) {
  const auto mesh = load_mesh("sy_delta");
  const SplineProblem p{mesh, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto want = conformality_rank_mod(p, PrimeField{kPrime}, false);
  for (auto _ : state) expect(state, conformality_rank_mod(p, PrimeField{kPrime}, Parallel), want);
}

template <bool Parallel>
void BM_dimension_table(benchmark::State& state) {
  const auto mesh = load_mesh("sy_delta");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto rows = dimension_table(mesh, r, 0, 4 * r + 3, {1, Parallel});
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK(BM_bareiss<false>)->Name("bareiss/serial")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bareiss<true>)->Name("bareiss/parallel")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_modular<false>)->Name("modular/serial")->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_modular<true>)->Name("modular/parallel")->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conformality<false>)->Name("conformality/serial")->Args({3, 7})->Args({6, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conformality<true>)->Name("conformality/parallel")->Args({3, 7})->Args({6, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_table<false>)->Name("dimension_table/serial")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_table<true>)->Name("dimension_table/parallel")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
