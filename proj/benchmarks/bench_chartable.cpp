#include <benchmark/benchmark.h>

#include "bredon/character.hpp"
#include "bredon/gcw_io.hpp"

namespace {

const bredon::EquivariantCellComplex& sl3z() {
  static auto x = bredon::load_complex_file(std::string(BREDON_DATA_DIR) + "/sl3z.gcw");
  return x;
}

void BM_ConjugacyClasses(benchmark::State& state) {
  auto g = sl3z().groups.at("S4a");
  for (auto _ : state) benchmark::DoNotOptimize(bredon::conjugacy_classes(*g));
}

void BM_CharacterTableMemoized(benchmark::State& state) {
  auto g = sl3z().groups.at("S4a");
  for (auto _ : state) benchmark::DoNotOptimize(bredon::character_table(g));
}

// Induction matrices are recomputed per call; this exercises the Frobenius
// sums and the exact cyclotomic arithmetic.
void BM_InductionMatrix(benchmark::State& state) {
  const auto& x = sl3z();
  const auto& inc = x.incidences.front().hom;
  for (auto _ : state) benchmark::DoNotOptimize(bredon::induction_matrix(inc));
}

}  // namespace

BENCHMARK(BM_ConjugacyClasses);
BENCHMARK(BM_CharacterTableMemoized);
BENCHMARK(BM_InductionMatrix);
