#include <benchmark/benchmark.h>

#include "dunkl/kernel.hpp"

using namespace dunkl;

static void KernelEvalSmallArgument(benchmark::State& state) {
  const Multiplicity k(1.3);
  const KernelEvaluator ev(k);
  double u = 0.5;
  for (auto _ : state) {
    auto p = ev.eval_u(cplx(u, 0.0));
    benchmark::DoNotOptimize(p);
    u = u < 9.0 ? u + 0.1 : 0.5;
  }
}
BENCHMARK(KernelEvalSmallArgument);

static void KernelEvalMarching(benchmark::State& state) {
  const Multiplicity k(1.3);
  const KernelEvaluator ev(k);
  const double u = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto p = ev.eval_u(cplx(u, 0.0));
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(KernelEvalMarching)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void KernelRayBatch(benchmark::State& state) {
  const Multiplicity k(0.5);
  const KernelEvaluator ev(k);
  std::vector<double> radii(state.range(0));
  for (std::size_t i = 0; i < radii.size(); ++i)
    radii[i] = 100.0 * (i + 1.0) / radii.size();
  for (auto _ : state) {
    auto pts = ev.eval_ray(cplx(1.0, 0.0), radii);
    benchmark::DoNotOptimize(pts);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(KernelRayBatch)->Arg(64)->Arg(512)->Arg(4096);

static void KernelResidual(benchmark::State& state) {
  const Multiplicity k(1.0, 0.7);
  for (auto _ : state) {
    double r = kernel_residual(k, 3.0, 7.0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(KernelResidual);
