#include <benchmark/benchmark.h>

#include "bredon/gcw_io.hpp"
#include "bredon/homology.hpp"

namespace {

void BM_Sl2zRepHomology(benchmark::State& state) {
  auto x = bredon::load_complex_file(std::string(BREDON_DATA_DIR) + "/sl2z.gcw");
  auto sys = bredon::make_rep_ring_system();
  for (auto _ : state)
    benchmark::DoNotOptimize(bredon::homology(bredon::assemble_chain(x, *sys)));
}

void BM_Sl3zRepHomology(benchmark::State& state) {
  auto x = bredon::load_complex_file(std::string(BREDON_DATA_DIR) + "/sl3z.gcw");
  auto sys = bredon::make_rep_ring_system();
  for (auto _ : state)
    benchmark::DoNotOptimize(bredon::homology(bredon::assemble_chain(x, *sys)));
}

void BM_ParseSl3z(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bredon::load_complex_file(std::string(BREDON_DATA_DIR) + "/sl3z.gcw"));
}

}  // namespace

BENCHMARK(BM_Sl2zRepHomology);
BENCHMARK(BM_Sl3zRepHomology);
BENCHMARK(BM_ParseSl3z);

BENCHMARK_MAIN();
