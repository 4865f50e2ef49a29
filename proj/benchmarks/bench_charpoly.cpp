#include <benchmark/benchmark.h>

#include "commulab/matrix.hpp"
#include "commulab/rng.hpp"

namespace {

using namespace commulab;

void BM_CharpolyBerkowitz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingSpec k = parse_ring("GF:32003");
  Rng rng(1);
  std::vector<RingValue> table;  // large field: sample directly
  Matrix a = random_matrix(rng, k, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(charpoly(a));
  }
}
BENCHMARK(BM_CharpolyBerkowitz)->DenseRange(2, 8);

void BM_CharpolyOverZmod27(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingSpec k = parse_ring("Zmod:27");
  Rng rng(2);
  std::vector<RingValue> table = enumerate_ring(k);
  Matrix a = random_matrix(rng, k, n, &table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(charpoly(a));
  }
}
BENCHMARK(BM_CharpolyOverZmod27)->DenseRange(2, 6);

void BM_MatrixInverseAdjugate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingSpec k = parse_ring("GF:32003");
  Rng rng(3);
  Matrix a = random_matrix(rng, k, n);
  while (!is_invertible(a)) a = random_matrix(rng, k, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(a));
  }
}
BENCHMARK(BM_MatrixInverseAdjugate)->DenseRange(2, 6);

}  // namespace
