#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include <argus/blaschke.hpp>
#include <argus/contour_index.hpp>
#include <argus/cusp.hpp>
#include <argus/suites.hpp>

using namespace argus;

namespace {

void BM_IndexOfCurve(benchmark::State& state) {
  const PathSpec circle = PathSpec::full_circle({0.0, 0.0}, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_of_curve(circle, 1e-10).value);
  }
}
BENCHMARK(BM_IndexOfCurve);

void BM_IndexOfImagePolynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  FunctionHandle f;
  f.evaluator = [k](cplx z) {
    cplx acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
  };
  f.derivative = [k](cplx z) {
    cplx acc(static_cast<double>(k), 0.0);
    for (int i = 0; i < k - 1; ++i) acc *= z;
    return acc;
  };
  const PathSpec gamma = PathSpec::upper_semicircle({0.0, 0.0}, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_of_image(f, gamma, 1e-9).value);
  }
}
BENCHMARK(BM_IndexOfImagePolynomial)->Arg(1)->Arg(3)->Arg(6);

void BM_CounterexampleIndex(benchmark::State& state) {
  const FunctionHandle f = suites::builtin_counterexample();
  const double r = std::pow(4.0, -static_cast<double>(state.range(0)));
  const PathSpec gamma = PathSpec::upper_semicircle({0.0, 0.0}, r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_of_image(f, gamma, 1e-8).value);
  }
}
BENCHMARK(BM_CounterexampleIndex)->Arg(1)->Arg(4)->Arg(8);

void BM_WindowProduct(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const BlaschkeSpec spec = BlaschkeSpec::cusp_example(K, K);
  const cplx z(0.3, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_product(spec.zeros, z));
  }
}
BENCHMARK(BM_WindowProduct)->Arg(10)->Arg(20)->Arg(40);

void BM_ConvergenceCertificate(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(convergence_certificate(K, K).tail_bound);
  }
}
BENCHMARK(BM_ConvergenceCertificate)->Arg(20)->Arg(50)->Arg(100);

void BM_WarschawskiEnvelope(benchmark::State& state) {
  const CuspProfile profile(2, {2.0, 1.0, 0.5}, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(warschawski_envelope(profile, 0.05));
  }
}
BENCHMARK(BM_WarschawskiEnvelope);

}  // namespace

BENCHMARK_MAIN();
