#include <benchmark/benchmark.h>

#include "beltrami/construct.hpp"
#include "beltrami/dynamics.hpp"
#include "beltrami/linalg.hpp"

namespace {

using namespace beltrami;

void BM_ExprProduct(benchmark::State& state) {
  const GoldenTrig a = catalog().I.component(0);
  const GoldenTrig b = catalog().I.component(1);
  for (auto _ : state) {
    GoldenTrig p = a.multiplied(b);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ExprProduct);

void BM_Curl(benchmark::State& state) {
  const GoldenField& f = catalog().I;
  for (auto _ : state) {
    GoldenField c = f.curl();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Curl);

void BM_Taylor(benchmark::State& state) {
  const GoldenField& f = catalog().V;
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = f.taylor(degree);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Taylor)->Arg(6)->Arg(10);

void BM_GroupGeneration(benchmark::State& state) {
  const std::vector<Mat3G> generators{rotation_alpha(), rotation_beta(), rotation_gamma()};
  for (auto _ : state) {
    MatrixGroup g = generate_group(generators);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GroupGeneration);

void BM_CompiledEval(benchmark::State& state) {
  const CompiledField v(catalog().I);
  const NumericPoint p{0.3, -0.7, 1.1};
  for (auto _ : state) {
    NumericPoint out = v.eval(p);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CompiledEval);

void BM_Rk4Orbit(benchmark::State& state) {
  const CompiledField v(catalog().I);
  const NumericPoint x0{5.0, 6.0, 7.0};
  const int steps = static_cast<int>(state.range(0));
  const double h = 1e-3;
  for (auto _ : state) {
    OrbitRecord rec = rk4_orbit(v, x0, h * steps, h);
    benchmark::DoNotOptimize(rec);
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Rk4Orbit)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
