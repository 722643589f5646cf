#include <benchmark/benchmark.h>

#include <numbers>

#include "zkosc/oscillator_algebra.hpp"
#include "zkosc/schrodinger_check.hpp"
#include "zkosc/shape_invariance.hpp"

using namespace zkosc;

namespace {

ValidatedParams bench_params(int k) {
  SipParams p;
  p.k = k;
  p.a0 = 0.8;
  p.delta = 0.4;
  p.n0 = 64;
  for (int s = 0; s < k; ++s) {
    p.omega.push_back(1.0 + 0.25 * s);
    p.sigma.push_back(p.omega.back() * (0.5 + p.delta * s / k));
  }
  return validate(p);
}

void BM_StructureClosed(benchmark::State& state) {
  const auto vp = bench_params(5);
  for (auto _ : state) benchmark::DoNotOptimize(structure_table(vp, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StructureClosed)->Arg(200)->Arg(2000);

void BM_StructureRecursive(benchmark::State& state) {
  const auto vp = bench_params(5);
  for (auto _ : state) benchmark::DoNotOptimize(structure_recursive(vp, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StructureRecursive)->Arg(200)->Arg(2000);

void BM_SpectrumMethods(benchmark::State& state) {
  const auto vp = bench_params(4);
  const auto method = static_cast<SpectrumMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(energy_spectrum(vp, 500, method));
}
BENCHMARK(BM_SpectrumMethods)->DenseRange(0, 2);

void BM_CheckAlgebra(benchmark::State& state) {
  const int k = 4;
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto vp = bench_params(k);
  const auto w = make_window(k, depth, vp.params().n0, Convention::Descending);
  const auto F = structure_for_window(vp, w, true);
  for (auto _ : state) benchmark::DoNotOptimize(check_algebra(w, F));
}
BENCHMARK(BM_CheckAlgebra)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Eigensolve(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  const auto v = sample_family({FamilyKind::PoschlTellerII, 3.0}, make_grid(-12.0, 12.0, points)).v_minus;
  for (auto _ : state) benchmark::DoNotOptimize(eigensolve(v, 3));
}
BENCHMARK(BM_Eigensolve)->Arg(1000)->Arg(3000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
