// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rmhd/kernels.hpp"

namespace {

using namespace rmhd;

std::pair<SheetSide, SheetSide> bench_sheet() {
  const EosModel eos{5.0 / 3.0};
  return {SheetSide::make(PrimitiveState::from_velocity(1.0, Vec3(0.0, 0.1, 0.0),
                                                        Vec3(0.0, 1.0, 0.0), 0.0, eos)),
          SheetSide::make(PrimitiveState::from_velocity(1.0, Vec3(0.0, -0.1, 0.0),
                                                        Vec3(0.0, 0.0, 1.0), 0.0, eos))};
}

template <auto Kernel>
void BM_Sweep(benchmark::State& state) {
  const auto [plus, minus] = bench_sheet();
  const int n = static_cast<int>(state.range(0));
  SweepGrid grid{0.0, 0.9, n, -3.1, 3.1, n};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(plus, minus, grid, SheetOptions{}));
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <auto Kernel>
void BM_Verify(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.seed = 47;
  cfg.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<SweepRow> sweep_parallel(const SheetSide& p, const SheetSide& m, const SweepGrid& g,
                                     const SheetOptions& o) {
  return sweep(p, m, g, o);
}

}  // namespace

BENCHMARK(BM_Sweep<sweep_parallel>)->Name("sweep/parallel")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_Sweep<sweep_serial>)->Name("sweep/serial")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_Verify<verify_residuals>)->Name("verify/parallel")->Arg(1000)->UseRealTime();
BENCHMARK(BM_Verify<verify_residuals_serial>)->Name("verify/serial")->Arg(1000)->UseRealTime();

BENCHMARK_MAIN();
