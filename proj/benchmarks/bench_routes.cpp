#include <benchmark/benchmark.h>

#include "apv/classical.hpp"
#include "apv/principal_value.hpp"
#include "apv/spf.hpp"

using namespace apv;

namespace {

IntegralSpec cos_spec(int n) {
  return IntegralSpec(parse("cos(z)"), AnalyticityDecl::entire_function(), -1, 1, 0, n);
}

void BM_Average(benchmark::State& state) {
  const IntegralSpec s = cos_spec(static_cast<int>(state.range(0)));
  const ComplexPath up = default_path(s, Side::above), down = default_path(s, Side::below);
  for (auto _ : state) benchmark::DoNotOptimize(apv_average(s, up, down, {}).value);
}
BENCHMARK(BM_Average)->Arg(0)->Arg(1)->Arg(3)->Arg(8);

void BM_AveragePoles(benchmark::State& state) {
  const IntegralSpec s(parse("1/(1+z^2)"), AnalyticityDecl::with_poles({{0, 1}, {0, -1}}), -0.6, 0.8, 0, 1);
  const ComplexPath up = default_path(s, Side::above), down = default_path(s, Side::below);
  for (auto _ : state) benchmark::DoNotOptimize(apv_average(s, up, down, {}).value);
}
BENCHMARK(BM_AveragePoles);

void BM_Fox(benchmark::State& state) {
  const IntegralSpec s = cos_spec(static_cast<int>(state.range(0)));
  const EpsSchedule sched = EpsSchedule::defaults(s);
  for (auto _ : state) benchmark::DoNotOptimize(fox_limit(s, sched, {}).value);
}
BENCHMARK(BM_Fox)->Arg(1)->Arg(3);

void BM_TaylorCoefficients(benchmark::State& state) {
  const IntegralSpec s = cos_spec(1);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_from_expr(s, default_taylor_terms, {}).c.data());
}
BENCHMARK(BM_TaylorCoefficients);

void BM_SeriesValue(benchmark::State& state) {
  const IntegralSpec s = cos_spec(static_cast<int>(state.range(0)));
  const TaylorCoeffs t = taylor_from_expr(s, default_taylor_terms, {});
  for (auto _ : state) benchmark::DoNotOptimize(series_value(t, s, default_taylor_terms).value);
}
BENCHMARK(BM_SeriesValue)->Arg(1)->Arg(3);

void BM_BoundaryValues(benchmark::State& state) {
  const IntegralSpec s = cos_spec(static_cast<int>(state.range(0)));
  const YSchedule ys = YSchedule::defaults(s);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_values(s, ys, {}).phi_plus);
}
BENCHMARK(BM_BoundaryValues)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
