#include <benchmark/benchmark.h>

#include "elliptikit/gamma.hpp"

using namespace elliptikit;

namespace {

struct Env {
  LatticeContext ctx{Complex(0.0, 1.0)};
  KroneckerTable table{ctx, 8};
  PunctureSet punctures{ctx, {0.0, Complex(0.5, 0.45)}};
  IteratedIntegrator integrator{table, punctures};
  GammaEvaluator gamma{integrator};
};

}  // namespace

static void BM_IteratedIntegral(benchmark::State& state) {
  Env env;
  std::vector<FormSpec> word(static_cast<std::size_t>(state.range(0)), FormSpec::kronecker(2, 0.0));
  Path path({Complex(0.1, 0.1), Complex(0.3, 0.05), Complex(0.35, 0.3)});
  for (auto _ : state) {
    env.table.clear_memo();
    benchmark::DoNotOptimize(env.integrator.integrate(word, path));
  }
}
BENCHMARK(BM_IteratedIntegral)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GammaShuffle(benchmark::State& state) {
  Env env;
  Word w{Letter{1, 0.0}, Letter{2, Complex(0.5, 0.45)}, Letter{1, 0.0}};
  Path path = env.gamma.default_path(Complex(0.3, 0.2));
  for (auto _ : state) {
    env.table.clear_memo();
    benchmark::DoNotOptimize(env.gamma.shuffle(w, path));
  }
}
BENCHMARK(BM_GammaShuffle)->Unit(benchmark::kMillisecond);

static void BM_GammaTangential(benchmark::State& state) {
  Env env;
  Word w{Letter{1, 0.0}, Letter{2, 0.0}};
  Path path = env.gamma.default_path(Complex(0.3, 0.2));
  for (auto _ : state) {
    env.table.clear_memo();
    benchmark::DoNotOptimize(env.gamma.tangential(w, path).value);
  }
}
BENCHMARK(BM_GammaTangential)->Unit(benchmark::kMillisecond);
