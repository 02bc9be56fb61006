#include <benchmark/benchmark.h>

#include "eqk/regcomp.hpp"
#include "eqk/steinberg.hpp"

namespace {

const char* const kTypes[] = {"A1", "A1xA1", "A2", "B2"};

void BM_TableParallel(benchmark::State& state) {
  const eqk::WeylGroup g(eqk::RootDatum::from_label(kTypes[state.range(0)]));
  const eqk::SteinbergSolver solver(g);
  for (auto _ : state) benchmark::DoNotOptimize(eqk::structure_table(solver));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_TableSerial(benchmark::State& state) {
  const eqk::WeylGroup g(eqk::RootDatum::from_label(kTypes[state.range(0)]));
  const eqk::SteinbergSolver solver(g);
  for (auto _ : state) benchmark::DoNotOptimize(eqk::structure_table_serial(solver));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_HomomorphismParallel(benchmark::State& state) {
  const eqk::RegCompModel model(eqk::RootDatum::from_label("A1xA1"));
  const auto pairs = eqk::oracle_pairs(model, 0, 50);
  for (auto _ : state) benchmark::DoNotOptimize(eqk::homomorphism_failures(model, pairs));
}

void BM_HomomorphismSerial(benchmark::State& state) {
  const eqk::RegCompModel model(eqk::RootDatum::from_label("A1xA1"));
  const auto pairs = eqk::oracle_pairs(model, 0, 50);
  for (auto _ : state) benchmark::DoNotOptimize(eqk::homomorphism_failures_serial(model, pairs));
}

}  // namespace

BENCHMARK(BM_TableParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomomorphismParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomomorphismSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
