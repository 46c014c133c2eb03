#include <benchmark/benchmark.h>

#include "ptrec/minimax.hpp"
#include "ptrec/risk.hpp"
#include "ptrec/sim.hpp"
#include "ptrec/specfun.hpp"

namespace {

using namespace ptrec;

void BM_RegIncBeta(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reg_inc_beta(x, a, a + 2.0));
    x = x < 0.9 ? x + 0.01 : 0.05;
  }
}
BENCHMARK(BM_RegIncBeta)->Arg(2)->Arg(10)->Arg(50);

void BM_FQuantile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_quantile(0.92, 10.0, 12.0));
}
BENCHMARK(BM_FQuantile);

void BM_PtRisk(benchmark::State& state) {
  const DesignPair design(5, 6);
  double delta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pt_risk(design, delta, 0.16));
    delta = delta < 5.0 ? delta * 1.05 : 0.1;
  }
}
BENCHMARK(BM_PtRisk);

void BM_RiskModelCoefficients(benchmark::State& state) {
  const RiskModel model(DesignPair(5, 6), 0.16);
  double delta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.coefficients(delta));
    delta = delta < 5.0 ? delta * 1.05 : 0.1;
  }
}
BENCHMARK(BM_RiskModelCoefficients);

void BM_OptimalAlpha(benchmark::State& state) {
  const DesignPair design(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_alpha(design));
}
BENCHMARK(BM_OptimalAlpha)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OptimalK(benchmark::State& state) {
  const DesignPair design(5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_k(design, 0.16));
}
BENCHMARK(BM_OptimalK)->Unit(benchmark::kMillisecond);

void BM_McOracleRisk(benchmark::State& state) {
  const DesignPair design(5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(mc_oracle_risk(design, 1.0, 0.16, 0.21, state.range(0), 1, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McOracleRisk)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
