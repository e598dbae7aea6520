#include <benchmark/benchmark.h>

#include "qsv/appell.hpp"
#include "qsv/hecke.hpp"
#include "qsv/registry.hpp"

using namespace qsv;

static void BM_SeriesMultiply(benchmark::State& state) {
  const Exponent t = state.range(0);
  QZSeries a = jacobi_theta(ThetaArg(-1, exponent(1, 2)), 1, t);
  QZSeries b = J(1, t);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(50)->Arg(200)->Arg(800);

static void BM_Inverse(benchmark::State& state) {
  const Exponent t = state.range(0);
  QZSeries a = J(1, t).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(invert_unit(a));
}
BENCHMARK(BM_Inverse)->Arg(50)->Arg(200)->Arg(800);

static void BM_JacobiTheta(benchmark::State& state) {
  const Exponent t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_theta(ThetaArg(Unit::i(), exponent(1, 4)), 1, t));
}
BENCHMARK(BM_JacobiTheta)->Arg(200)->Arg(2000);

static void BM_HeckeSum(benchmark::State& state) {
  const Exponent t = state.range(0);
  HeckeParams prm{1, 8, 48, ThetaArg(1, 2), ThetaArg(-1, 30)};
  for (auto _ : state) benchmark::DoNotOptimize(hecke_sum(prm, t));
}
BENCHMARK(BM_HeckeSum)->Arg(200)->Arg(1000);

static void BM_StringFunction(benchmark::State& state) {
  const Exponent t = state.range(0);
  for (auto _ : state) {
    clear_series_cache();
    benchmark::DoNotOptimize(string_coeff({3, 8, 1, 1}, true, t));
  }
}
BENCHMARK(BM_StringFunction)->Arg(100)->Arg(200);

static void BM_AppellJProduct(benchmark::State& state) {
  const Exponent t = state.range(0);
  AppellArgs args{ThetaArg(-1, exponent(1, 3)), ThetaArg(1, exponent(1, 2)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(appell_j_product(args, t));
}
BENCHMARK(BM_AppellJProduct)->Arg(100)->Arg(400);

static void BM_VerifyFamily(benchmark::State& state) {
  RunOptions opts;
  opts.timing = false;
  for (auto _ : state) {
    clear_series_cache();
    benchmark::DoNotOptimize(run_suite("cor:pP38*", opts, 1));
  }
}
BENCHMARK(BM_VerifyFamily)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
