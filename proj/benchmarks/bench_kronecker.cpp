#include <benchmark/benchmark.h>

#include "elliptikit/kronecker.hpp"

using namespace elliptikit;

static void BM_KroneckerUncached(benchmark::State& state) {
  LatticeContext ctx(Complex(0.0, 1.0));
  KroneckerTable table(ctx, static_cast<int>(state.range(0)), 0.0, 1);
  Complex z(0.31, 0.27);
  for (auto _ : state) {
    table.clear_memo();
    benchmark::DoNotOptimize(table.g_all(z));
  }
}
BENCHMARK(BM_KroneckerUncached)->Arg(4)->Arg(8)->Arg(12);

static void BM_KroneckerMemoHit(benchmark::State& state) {
  LatticeContext ctx(Complex(0.0, 1.0));
  KroneckerTable table(ctx, 8);
  Complex z(0.31, 0.27);
  table.g(8, z);
  for (auto _ : state) benchmark::DoNotOptimize(table.g(8, z));
}
BENCHMARK(BM_KroneckerMemoHit);

static void BM_SymbolicG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_symbolic(n));
}
BENCHMARK(BM_SymbolicG)->Arg(6)->Arg(12);
