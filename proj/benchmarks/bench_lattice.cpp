#include <benchmark/benchmark.h>

#include "elliptikit/lattice.hpp"

using namespace elliptikit;

static void BM_ContextConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(LatticeContext(Complex(0.5, 1.5)));
}
BENCHMARK(BM_ContextConstruction);

static void BM_EisensteinFunctions(benchmark::State& state) {
  LatticeContext ctx(Complex(0.0, 1.0));
  const int r_max = static_cast<int>(state.range(0));
  Complex z(0.31, 0.27);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.eisenstein_functions(r_max, z));
    z += 1e-7;
  }
}
BENCHMARK(BM_EisensteinFunctions)->Arg(2)->Arg(6)->Arg(12);

static void BM_OracleDoubleSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_eisenstein_function(Complex(0.0, 1.0), 4, Complex(0.31, 0.27), n, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_OracleDoubleSum)->Arg(50)->Arg(100)->Arg(200)->Complexity(benchmark::oNSquared);
