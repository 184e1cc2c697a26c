#include "pplab/bundle_split.hpp"
#include "pplab/jetmap.hpp"
#include "pplab/linalg.hpp"
#include "pplab/parabolic.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace pplab;

RationalMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

void BM_Rref(benchmark::State& state)
{
  const RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32)->Arg(56);

void BM_SymAction(benchmark::State& state)
{
  const GroupElement g = random_parabolic(3, 11);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sym_action(g, n));
}
BENCHMARK(BM_SymAction)->DenseRange(2, 6, 2);

void BM_VerifyTheorem(benchmark::State& state)
{
  const auto N = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_theorem(N, n, n / 2, 10, 0));
}
BENCHMARK(BM_VerifyTheorem)->Args({1, 4})->Args({2, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_SplittingType(benchmark::State& state)
{
  const auto N = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const TransitionData T = jet_transition_matrix(N, n, n - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(splitting_type(T));
}
BENCHMARK(BM_SplittingType)->Args({1, 4})->Args({2, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
