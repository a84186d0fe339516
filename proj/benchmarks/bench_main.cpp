#include <benchmark/benchmark.h>

#include "phigrad/coupling.hpp"
#include "phigrad/degree.hpp"
#include "phigrad/radial.hpp"
#include "phigrad/verdict.hpp"

using namespace phigrad;

static void BM_AnalyzeDegreeClosedForm(benchmark::State& state) {
  const PhiSpec phi = PhiSpec::sum_of_powers({{1.0, 2.0}, {1.0, 4.0}});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_degree(phi, 3));
}
BENCHMARK(BM_AnalyzeDegreeClosedForm);

static void BM_AnalyzeDegreeNumeric(benchmark::State& state) {
  const PhiSpec phi =
      PhiSpec::sum_of_powers({{1.0, 2.0}, {0.5, 2.5}, {0.25, 3.0}, {2.0, 4.0}});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_degree(phi, 3));
}
BENCHMARK(BM_AnalyzeDegreeNumeric);

static void BM_Classify(benchmark::State& state) {
  const PhiSpec phi = PhiSpec::sum_of_powers({{1.0, 2.0}, {1.0, 3.0}});
  const PsiSpec psi = PsiSpec::double_power(1.5, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(classify(phi, psi, 3, true));
}
BENCHMARK(BM_Classify);

static void BM_ThetaCornerEvaluation(benchmark::State& state) {
  const PhiSpec phi = PhiSpec::sum_of_powers({{1.0, 2.0}, {1.0, 3.0}});
  const PsiSpec psi = PsiSpec::power(-1.0, 2.0);
  const IntervalSet set = compute_i_psi(phi, psi, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_theta_big(phi, psi, 3, set));
}
BENCHMARK(BM_ThetaCornerEvaluation);

static void BM_InvertFlux(benchmark::State& state) {
  const PhiSpec phi = PhiSpec::sum_of_powers({{1.0, 2.0}, {1.0, 4.0}});
  double g = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_flux(phi, g));
    g = g < 100.0 ? g * 1.01 : 0.1;
  }
}
BENCHMARK(BM_InvertFlux);

static void BM_SolveRadial(benchmark::State& state) {
  const ModelSpace space{3, 0.0};
  const PsiSpec psi = PsiSpec::power(1.0, 1.0);
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        solve_radial(PhiSpec::constant_one(), psi, space, 1.0, 1.0, h));
}
BENCHMARK(BM_SolveRadial)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
