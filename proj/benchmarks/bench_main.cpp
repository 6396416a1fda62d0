#include "strebel/construct.hpp"
#include "strebel/enumerate.hpp"
#include "strebel/numeric.hpp"
#include "strebel/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

using strebel::Rational;

void BM_BuildThreePole(benchmark::State& state) {
  for (auto _ : state) {
    auto result = strebel::build_three_pole(Rational(7, 10), Rational(3, 2), 4);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_BuildThreePole);

void BM_BuildSphere(benchmark::State& state) {
  std::vector<Rational> alpha;
  for (int i = 0; i < state.range(0); ++i) alpha.emplace_back(2 * i + 3, 2);
  for (auto _ : state) {
    auto result = strebel::build_sphere_simple(alpha);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_BuildSphere)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildGenus(benchmark::State& state) {
  const std::vector<Rational> alpha{5, 6, 7};
  for (auto _ : state) {
    auto result = strebel::build(static_cast<int>(state.range(0)), alpha);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_BuildGenus)->Arg(1)->Arg(2)->Arg(4);

void BM_EnumerateSmall(benchmark::State& state) {
  for (auto _ : state) {
    auto classes = strebel::enumerate_small(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_EnumerateSmall)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DegeneracyCheck(benchmark::State& state) {
  std::vector<Rational> alpha;
  for (int i = 0; i < 8; ++i) alpha.emplace_back(i + 2);
  const auto built = strebel::build(2, alpha);
  for (auto _ : state) {
    auto cover = strebel::degeneracy_check(built.graph);
    benchmark::DoNotOptimize(cover);
  }
}
BENCHMARK(BM_DegeneracyCheck);

void BM_PoleMonodromy(benchmark::State& state) {
  const auto d = strebel::q_poly(0.5, 0.7, 0.9);
  for (auto _ : state) {
    auto probe = strebel::pole_monodromy_numeric(d, 0, 0.2, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(probe);
  }
}
BENCHMARK(BM_PoleMonodromy)->Arg(512)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_CurvatureProbe(benchmark::State& state) {
  const auto d = strebel::q_poly(0.5, 0.7, 0.9);
  const std::vector<std::complex<double>> samples{{0.3, 0.8}, {-0.7, -0.6}, {1.9, 0.9}};
  for (auto _ : state) {
    auto probes = strebel::curvature_probe(d, samples, 1e-3);
    benchmark::DoNotOptimize(probes);
  }
}
BENCHMARK(BM_CurvatureProbe)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
