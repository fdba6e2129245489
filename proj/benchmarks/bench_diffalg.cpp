#include <benchmark/benchmark.h>

#include "elliptikit/diffalg.hpp"
#include "elliptikit/shuffle.hpp"

using namespace elliptikit;

static void BM_ReduceKronecker(benchmark::State& state) {
  EllipticPoly u = g_as_elliptic_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_derivative(u));
}
BENCHMARK(BM_ReduceKronecker)->Arg(4)->Arg(8)->Arg(12);

static void BM_ReduceDense(benchmark::State& state) {
  EllipticPoly u = parse_elliptic_poly("(P + X + Q + e2)^3 + g2 X^2 P");
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_derivative(u));
}
BENCHMARK(BM_ReduceDense);

static void BM_StarDecompose(benchmark::State& state) {
  const Letter log{1, 0.0}, a{2, 0.0};
  Word w;
  for (int k = 0; k < state.range(0); ++k) w.push_back(k % 2 == 0 ? log : a);
  ShuffleElement<GaussRational> e(w);
  for (auto _ : state) benchmark::DoNotOptimize(star_decompose(e));
}
BENCHMARK(BM_StarDecompose)->Arg(2)->Arg(4)->Arg(6);
