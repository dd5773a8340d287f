// Serial reference kernels against their OpenMP counterparts on exact
// rational and quaternion matrices.

#include <benchmark/benchmark.h>

#include <random>

#include "revcert/kernels.hpp"

namespace {

using namespace revcert;

template <class T>
T random_scalar(std::mt19937_64& rng);

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  return Rational(d(rng), 1 + (d(rng) + 9) % 4);
}

template <>
Quaternion random_scalar<Quaternion>(std::mt19937_64& rng) {
  return {random_scalar<Rational>(rng), random_scalar<Rational>(rng), random_scalar<Rational>(rng),
          random_scalar<Rational>(rng)};
}

template <class T>
DenseMatrix<T> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix<T> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_scalar<T>(rng);
  return m;
}

template <class T, bool Parallel>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix<T>(n, 1);
  const auto b = random_matrix<T>(n, 2);
  for (auto _ : state) {
    auto c = Parallel ? kernels::multiply_parallel(a, b) : kernels::multiply_serial(a, b);
    benchmark::DoNotOptimize(c);
  }
}

template <class T, bool Parallel>
void BM_Eliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto base = random_matrix<T>(n, 3);
  const T inv = inverse(base(0, 0));
  for (std::size_t c = 0; c < n; ++c) base(0, c) = inv * base(0, c);
  for (auto _ : state) {
    auto m = base;
    if (Parallel)
      kernels::eliminate_parallel(m, 0, 0);
    else
      kernels::eliminate_serial(m, 0, 0);
    benchmark::DoNotOptimize(m);
  }
}

}  // namespace

BENCHMARK(BM_Multiply<Rational, false>)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Multiply<Rational, true>)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Multiply<Quaternion, false>)->Arg(16)->Arg(32);
BENCHMARK(BM_Multiply<Quaternion, true>)->Arg(16)->Arg(32);
BENCHMARK(BM_Eliminate<Rational, false>)->Arg(64)->Arg(128);
BENCHMARK(BM_Eliminate<Rational, true>)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
