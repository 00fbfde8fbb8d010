#include <benchmark/benchmark.h>

#include "galcurve/families.hpp"
#include "galcurve/frenet.hpp"
#include "galcurve/sampling.hpp"
#include "galcurve/smarandache.hpp"

using namespace galcurve;

namespace {

const Curve& salkowski() {
  static const Curve c = make_salkowski(1.0, ScalarFunction::parse("s"), {0.0, 2.0});
  return c;
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"n", "parallel"});
  for (int n : {1 << 10, 1 << 14}) {
    b->Args({n, 0});
    b->Args({n, 1});
  }
  b->UseRealTime();
}

void BM_SampleCurve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_curve(salkowski(), state.range(0), mode(state)));
  }
}

void BM_Smarandache(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(smarandache_curve(salkowski(), SmarandacheKind::TNB, state.range(0), mode(state)));
  }
}

void BM_Admissible(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_admissible(salkowski(), state.range(0), mode(state)));
  }
}

void BM_SmarandacheFiniteDifference(benchmark::State& state) {
  const Curve exact = example_general_helix();
  const Curve fd = Curve::closed_form(exact.domain(), [exact](double s) {
    const GVec3 p = exact.point(s);
    return Transverse{p.x2(), p.x3()};
  });
  for (auto _ : state) {
    benchmark::DoNotOptimize(smarandache_curve(fd, SmarandacheKind::TN, state.range(0), mode(state)));
  }
}

}  // namespace

BENCHMARK(BM_SampleCurve)->Apply(args);
BENCHMARK(BM_Smarandache)->Apply(args);
BENCHMARK(BM_Admissible)->Apply(args);
BENCHMARK(BM_SmarandacheFiniteDifference)->Apply(args);

BENCHMARK_MAIN();
