#include <benchmark/benchmark.h>

#include "mixed3geo/curvature.hpp"
#include "mixed3geo/models.hpp"
#include "mixed3geo/suites.hpp"

using namespace mixed3geo;

namespace {

const HypersurfaceModel& model() {
  static HypersurfaceModel m = pseudo_sphere(1, +1, 42);
  return m;
}

void BM_MetricEval(benchmark::State& state) {
  const auto& m = model();
  auto pts = sample_points(m.chart, 16, 42);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.S.g.values(pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_MetricEval);

void BM_Christoffel(benchmark::State& state) {
  const auto& m = model();
  auto pts = sample_points(m.chart, 16, 42);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(christoffel(m.S.g, pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_Christoffel);

void BM_RiemannPack(benchmark::State& state) {
  const auto& m = model();
  auto pts = sample_points(m.chart, 16, 42);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann(m.S.g, pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_RiemannPack);

void BM_SuiteEinstein(benchmark::State& state) {
  SuiteSpec spec;
  spec.suite_id = "einstein";
  spec.model_key = "pseudo-sphere:1:+1";
  spec.points = 4;
  spec.vectors_per_point = 2;
  spec.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(spec));
  }
}
BENCHMARK(BM_SuiteEinstein);

}  // namespace

BENCHMARK_MAIN();
