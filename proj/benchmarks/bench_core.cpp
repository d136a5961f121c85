#include "fibresum/canonical.hpp"
#include "fibresum/fibre_sum.hpp"
#include "fibresum/manifold.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fibresum;

void BM_SignatureE8H(benchmark::State& state) {
  IntegralLattice L = direct_sum(e8_form(-1), hyperbolic_plane());
  for (int i = 1; i < state.range(0); ++i) L = direct_sum(L, hyperbolic_plane());
  for (auto _ : state) benchmark::DoNotOptimize(signature(L));
}
BENCHMARK(BM_SignatureE8H)->Arg(2)->Arg(8)->Arg(16);

void BM_Determinant(benchmark::State& state) {
  IntegralLattice L = e8_form(-1);
  for (int i = 8; i < state.range(0); i += 2) L = direct_sum(L, hyperbolic_plane());
  for (auto _ : state) benchmark::DoNotOptimize(determinant_and_unimodularity(L));
}
BENCHMARK(BM_Determinant)->Arg(16)->Arg(32)->Arg(64);

void BM_IteratedFibreSum(benchmark::State& state) {
  const Fibred4Manifold m = preset_manifold("quintic");
  for (auto _ : state)
    benchmark::DoNotOptimize(iterated_fibre_sum(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IteratedFibreSum)->Arg(2)->Arg(4);

void BM_DivisibilityQuintic(benchmark::State& state) {
  const Fibred4Manifold m = preset_manifold("quintic");
  for (auto _ : state) benchmark::DoNotOptimize(d_of(m));
}
BENCHMARK(BM_DivisibilityQuintic);

}  // namespace

BENCHMARK_MAIN();
