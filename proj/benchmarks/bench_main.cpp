#include <benchmark/benchmark.h>

#include "rankone/convolution.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"

namespace {

using namespace rankone;

void BM_Phi(benchmark::State& state) {
  const RankOneGroup g = RankOneGroup::sl2r();
  const SpectralParameter lambda(static_cast<double>(state.range(0)));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(g, lambda, t));
    t = t < 10.0 ? t + 0.01 : 0.0;
  }
}
BENCHMARK(BM_Phi)->Arg(1)->Arg(10)->Arg(100);

void BM_PolarTransform(benchmark::State& state) {
  const RankOneGroup g = RankOneGroup::sl2r();
  const RadialFunction f = RadialFunction::bump(1.0, 0.5);
  const SpectralParameter lambda(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spherical_transform_polar(g, f, lambda));
  }
}
BENCHMARK(BM_PolarTransform)->Arg(1)->Arg(20);

void BM_ConvolveOracle(benchmark::State& state) {
  const RankOneGroup g = RankOneGroup::sl2r();
  const RadialFunction f = RadialFunction::bump(0.0, 0.6);
  const RadialFunction h = RadialFunction::bump(1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_oracle(g, f, h, 0.8));
  }
}
BENCHMARK(BM_ConvolveOracle);

}  // namespace
BENCHMARK_MAIN();
