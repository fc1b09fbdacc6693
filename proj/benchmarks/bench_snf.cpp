#include <benchmark/benchmark.h>

#include <random>

#include "bredon/matrix.hpp"

namespace {

bredon::IntegerMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-10, 10);
  bredon::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 12345);
  for (auto _ : state) {
    auto snf = bredon::smith_normal_form(m);
    benchmark::DoNotOptimize(snf.divisors);
  }
}

}  // namespace

BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(30);
