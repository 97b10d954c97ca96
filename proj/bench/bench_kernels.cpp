#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gradpade/atoms.hpp"
#include "gradpade/hooke.hpp"
#include "gradpade/kernels.hpp"
#include "gradpade/resum.hpp"

using namespace gradpade;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

const DensityPtr& argon() {
  static const DensityPtr d = atoms::atom_density(atoms::parse_sto(GRADPADE_DATA_DIR "/atoms/ar.json"));
  return d;
}

void BM_TauProfile(benchmark::State& state) {
  const DensityPtr& d = argon();
  std::vector<double> radii;
  for (int i = 1; i <= 4096; ++i) radii.push_back(0.005 * i);
  for (auto _ : state) benchmark::DoNotOptimize(tau_profile(*d, radii, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(radii.size()));
}

void BM_EvaluatePanels(benchmark::State& state) {
  const DensityPtr& d = argon();
  const ScalarField f = [&d](double r) { return *resummed(tau_point(d->eval(r), r), ResumMethod::Pade11); };
  std::vector<Panel> base;
  for (int i = 0; i < 1024; ++i) base.push_back({0.01 + 0.01 * i, 0.01 + 0.01 * (i + 1)});
  for (auto _ : state) {
    std::vector<Panel> panels = base;
    evaluate_panels(f, panels, mode(state));
    benchmark::DoNotOptimize(panels.data());
  }
}

void BM_IntegrateMethod(benchmark::State& state) {
  const DensityPtr d = hooke::omega_half_density();
  const RadialGrid grid = kinetic_grid(*d);
  IntegrationOptions opt;
  opt.quad.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_method(*d, ResumMethod::Pade21, grid, 1.0, opt).T);
}

}  // namespace

BENCHMARK(BM_TauProfile)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluatePanels)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateMethod)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
