#include <benchmark/benchmark.h>

#include <cmath>

#include "dunkl/quadrature.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

static void WeightedGridBuild(benchmark::State& state) {
  const Multiplicity k(1.3);
  GridOptions opt;
  opt.max_freq = 2.0;
  const double xmax = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto g = WeightedGrid::build(k, xmax, opt);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(WeightedGridBuild)->Arg(10)->Arg(100)->Arg(400);

static void GaussJacobiNodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = gauss_jacobi01(n, 2.6);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(GaussJacobiNodes)->Arg(24)->Arg(48)->Arg(96);

static void GaussianTransform(benchmark::State& state) {
  const Multiplicity k(0.5);
  std::vector<double> ls;
  for (int i = 0; i <= 40; ++i) ls.push_back(-4.0 + 8.0 * i / 40);
  const FuncRep f(ClosedForm::gaussian(1.0));
  for (auto _ : state) {
    auto p = dunkl_transform(k, f, ls);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(GaussianTransform);
