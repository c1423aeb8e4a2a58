#include <benchmark/benchmark.h>

#include <cmath>

#include "choquet/korovkin.hpp"

namespace {

using namespace choquet;

void BM_Modulus(benchmark::State& state) {
  const auto f = SampledFunction::FromFunction([](double t) { return std::sin(30.0 * t); },
                                               0.0, 1.0, 4096);
  const double delta = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ModulusOfContinuity(f, delta));
}
BENCHMARK(BM_Modulus)->Arg(1000)->Arg(10)->Arg(2);

void BM_ModulusBruteForce(benchmark::State& state) {
  const auto f = SampledFunction::FromFunction([](double t) { return std::sin(30.0 * t); },
                                               0.0, 1.0, 4096);
  const double delta = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ModulusOfContinuityBruteForce(f, delta));
}
BENCHMARK(BM_ModulusBruteForce)->Arg(1000)->Arg(10);

void BM_BoundCheck(benchmark::State& state) {
  KorovkinConfig cfg;
  cfg.distortion = Distortion::Moebius();
  cfg.c = 4.0;
  cfg.ns = PowersOfTwo(static_cast<int>(state.range(0)));
  cfg.xs = UniformGrid(0.0, 1.0, 51);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Theorem4BoundCheck([](double t) { return std::abs(t - 0.5); }, cfg));
  }
}
BENCHMARK(BM_BoundCheck)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
