#include <benchmark/benchmark.h>

#include "orthokit/catalog.hpp"
#include "orthokit/proof.hpp"
#include "orthokit/varieties.hpp"

using namespace orthokit;

static void BM_CheckLaw(benchmark::State& state, const char* lattice, const char* law) {
  const auto& L = builtin(lattice);
  for (auto _ : state) benchmark::DoNotOptimize(check_law(L, law).holds());
}
BENCHMARK_CAPTURE(BM_CheckLaw, rw20_womli, "RW20", "WOMLi");
BENCHMARK_CAPTURE(BM_CheckLaw, rw20_wdol3, "RW20", "wdol3");
BENCHMARK_CAPTURE(BM_CheckLaw, nwd10_woml, "NWD10", "WOML");

static void BM_Classify(benchmark::State& state, const char* lattice) {
  const auto& L = builtin(lattice);
  for (auto _ : state) benchmark::DoNotOptimize(classify(L).is_WOML);
}
BENCHMARK_CAPTURE(BM_Classify, o6, "O6");
BENCHMARK_CAPTURE(BM_Classify, rw20, "RW20");

static void BM_ClassifyParallel(benchmark::State& state) {
  SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  const auto& L = builtin("RW20");
  for (auto _ : state) benchmark::DoNotOptimize(classify(L, opts).is_WOML);
}
BENCHMARK(BM_ClassifyParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_AxiomValidity(benchmark::State& state, std::size_t axiom) {
  const Wff w = schema_instance(quantum_logic().axiom(axiom));
  const auto& L = builtin("RW20");
  for (auto _ : state) benchmark::DoNotOptimize(check_validity(L, w).holds());
}
BENCHMARK_CAPTURE(BM_AxiomValidity, a2, 2);
BENCHMARK_CAPTURE(BM_AxiomValidity, a14, 14);

static void BM_SoundnessSuite(benchmark::State& state) {
  const auto& L = builtin("RW20");
  for (auto _ : state) benchmark::DoNotOptimize(soundness_suite(quantum_logic(), L).ok());
}
BENCHMARK(BM_SoundnessSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
