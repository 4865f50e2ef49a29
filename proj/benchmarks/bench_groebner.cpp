#include <benchmark/benchmark.h>

#include "commulab/groebner.hpp"
#include "commulab/symbolic.hpp"

namespace {

using namespace commulab;

void BM_JordanFiberBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CoeffField f{32003};
  PolySystem sys = build_jordan_fiber_system(n, 2, f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(sys.gens, MonomialOrder::degrevlex()));
  }
}
BENCHMARK(BM_JordanFiberBasis)->DenseRange(2, 4);

void BM_NilpotentConeBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CoeffField f{32003};
  PolySystem sys = build_nilpotent_cone_system(n, f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(sys.gens, MonomialOrder::degrevlex()));
  }
}
BENCHMARK(BM_NilpotentConeBasis)->DenseRange(2, 3);

void BM_V4FiberDimension(benchmark::State& state) {
  VarietyDimensionConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        variety_dimension_experiment(VarietySystem::V4Fiber, cfg));
  }
}
BENCHMARK(BM_V4FiberDimension)->Unit(benchmark::kMillisecond);

}  // namespace
