#include <benchmark/benchmark.h>

#include <cmath>

#include "meanspin/entropy.hpp"
#include "meanspin/measurement.hpp"
#include "meanspin/qstate.hpp"
#include "meanspin/schmidt.hpp"

using namespace meanspin;

namespace {

PureTwoQubitState sample_state() {
  RngStream rng(0xBE7C, 0);
  return haar_random_state(rng);
}

}  // namespace

static void BM_HaarRandomState(benchmark::State& state) {
  RngStream rng(1, 0);
  for (auto _ : state) {
    auto psi = haar_random_state(rng);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_HaarRandomState);

static void BM_PartialTrace(benchmark::State& state) {
  const auto psi = sample_state();
  for (auto _ : state) {
    auto rho = partial_trace(psi, Atom::One);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_PartialTrace);

static void BM_SchmidtDecompose(benchmark::State& state) {
  const auto psi = sample_state();
  for (auto _ : state) {
    auto d = schmidt_decompose(psi);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SchmidtDecompose);

static void BM_Analyze(benchmark::State& state) {
  const auto psi = sample_state();
  for (auto _ : state) {
    auto rep = analyze(psi);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Analyze);

static void BM_MeasureState(benchmark::State& state) {
  const auto psi = sample_state();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto run = measure_state(psi, Atom::One,
                             static_cast<std::uint64_t>(state.range(0)), seed++);
    benchmark::DoNotOptimize(run);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeasureState)->RangeMultiplier(10)->Range(100, 1000000)->Complexity();

BENCHMARK_MAIN();
