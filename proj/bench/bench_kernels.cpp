// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "hornlr/converse_scan.hpp"
#include "hornlr/horn_realize.hpp"
#include "hornlr/lr.hpp"
#include "hornlr/schur_weyl.hpp"

using namespace hornlr;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_CompareLrRoutes(benchmark::State& state) {
  const auto triples = balanced_frame_triples(8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(compare_lr_routes(triples, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}

void BM_MeasurementDistribution(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto rho = random_density(3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(measurement_distribution(rho, 20, mode(state)));
}

void BM_RealizeTriple(benchmark::State& state) {
  const SpectralTriple t(DominantWeight({3, 2, 1}), DominantWeight({2, 1, 0}), DominantWeight({4, 3, 2}));
  RealizeConfig c;
  c.restarts = 8;
  c.steps = 200;
  c.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(realize_triple(t, 1e-14, c, 3));
}

void BM_Scan(benchmark::State& state) {
  const auto target = ScanTarget::from_operators(DensityOperator::diagonal({0.7, 0.2, 0.1}),
                                                 DensityOperator::diagonal({0.5, 0.3, 0.2}), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(scan(target, {8, 16, 24}, 2.0, mode(state)));
}

}  // namespace

BENCHMARK(BM_CompareLrRoutes)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasurementDistribution)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeTriple)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
