#include "hopf/ansatz.hpp"
#include "hopf/energy.hpp"
#include "hopf/form.hpp"
#include "hopf/topology.hpp"

#include <benchmark/benchmark.h>

using namespace hopf;

static void BM_EnergyMap(benchmark::State& state) {
  const MapField psi = make_ansatz(AnsatzKind::hopf, Grid(static_cast<int>(state.range(0))), 1).psi;
  for (auto _ : state) benchmark::DoNotOptimize(energy_map(psi).total);
  state.SetItemsProcessed(state.iterations() * psi.grid().sites());
}
BENCHMARK(BM_EnergyMap)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_EnergyGradient(benchmark::State& state) {
  const MapField psi = make_ansatz(AnsatzKind::hopf, Grid(static_cast<int>(state.range(0))), 1).psi;
  for (auto _ : state) benchmark::DoNotOptimize(energy_gradient(psi).data().data());
  state.SetItemsProcessed(state.iterations() * psi.grid().sites());
}
BENCHMARK(BM_EnergyGradient)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ExteriorDerivative(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  const LatticeField a = pullback_coisotropy(make_ansatz(AnsatzKind::hopf, grid, 1).psi);
  for (auto _ : state) benchmark::DoNotOptimize(d(a).data().data());
}
BENCHMARK(BM_ExteriorDerivative)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ChernSimons(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  const PotentialField a = pure_gauge_potential(make_ansatz(AnsatzKind::hopf, grid, 1).u);
  for (auto _ : state) benchmark::DoNotOptimize(chern_simons_charge(a).cs);
}
BENCHMARK(BM_ChernSimons)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Whitehead(benchmark::State& state) {
  const MapField psi = make_ansatz(AnsatzKind::hopf, Grid(static_cast<int>(state.range(0))), 1).psi;
  for (auto _ : state) benchmark::DoNotOptimize(whitehead_charge(psi));
}
BENCHMARK(BM_Whitehead)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Linking(benchmark::State& state) {
  const MapField psi = make_ansatz(AnsatzKind::hopf, Grid(static_cast<int>(state.range(0))), 1).psi;
  for (auto _ : state) benchmark::DoNotOptimize(linking_charge(psi, Vec3::UnitY(), Vec3::UnitZ()));
}
BENCHMARK(BM_Linking)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
