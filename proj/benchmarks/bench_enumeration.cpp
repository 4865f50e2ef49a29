#include <benchmark/benchmark.h>

#include "commulab/equations.hpp"

namespace {

using namespace commulab;

void BM_BruteForcePowerX(benchmark::State& state) {
  RingSpec k = parse_ring("GF:5");
  Matrix a = Matrix::diagonal(k, {k.zero(), k.one()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_solutions(EquationId::power_x(2), a));
  }
  state.SetItemsProcessed(state.iterations() * 625);
}
BENCHMARK(BM_BruteForcePowerX);

void BM_PairEnumerationSquare(benchmark::State& state) {
  RingSpec k = parse_ring("GF:3");
  auto commute = [](const Matrix& a, const Matrix& b) {
    return commutator(a, b).is_zero();
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pair_enumeration(EquationId::square(), k, 2, commute, "AB=BA"));
  }
  state.SetItemsProcessed(state.iterations() * 6561);
}
BENCHMARK(BM_PairEnumerationSquare);

void BM_ResidualPowerX3x3(benchmark::State& state) {
  RingSpec k = parse_ring("GF:5");
  Matrix a = Matrix::diagonal(k, {k.zero(), k.one(), k.from_int(2)});
  Matrix x = jordan_block(3, k);
  EquationId eq = EquationId::power_x(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(residual(eq, a, x));
  }
}
BENCHMARK(BM_ResidualPowerX3x3);

}  // namespace
