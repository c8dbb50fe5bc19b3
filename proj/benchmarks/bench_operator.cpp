#include <benchmark/benchmark.h>

#include "dunkl/analysis.hpp"

using namespace dunkl;

static void DirectOperatorIteration(benchmark::State& state) {
  const Multiplicity k(1.3);
  const ClosedForm b = ClosedForm::bump(2.0, 0.6);
  const ChebPoly f = ChebPoly::fit([&b](double x) { return b.eval(x); }, 2.0, 140);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = dunkl_power(k, FuncRep(f), n);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(DirectOperatorIteration)->Arg(1)->Arg(4)->Arg(8);

static void SpectralNormSweep(benchmark::State& state) {
  const Multiplicity k(0.5);
  const BandLimited bl = band_limited_synthesize(k, 1.0, 0.9, 200.0);
  const SpectralSource src = make_source(bl);
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PowerNormGrids grids = make_power_norm_grids(src, n_max);
    std::vector<int> ns;
    for (int n = 1; n <= n_max; ++n) ns.push_back(n);
    auto norms = power_norms(grids, ns, 2.0);
    benchmark::DoNotOptimize(norms);
  }
}
BENCHMARK(SpectralNormSweep)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BandLimitedEval(benchmark::State& state) {
  const Multiplicity k(0.5);
  const BandLimited bl = band_limited_synthesize(k, 1.0, 0.9, 200.0);
  double x = 0.0;
  for (auto _ : state) {
    auto v = bl.eval(x);
    benchmark::DoNotOptimize(v);
    x = x < 150.0 ? x + 1.7 : 0.0;
  }
}
BENCHMARK(BandLimitedEval);

BENCHMARK_MAIN();
