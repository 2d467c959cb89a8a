#include <benchmark/benchmark.h>

#include "morsekit/props.hpp"

namespace {

void BM_EvalSpectrum(benchmark::State& state) {
  const morsekit::MorseParams p(9, 3);
  double w = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(morsekit::eval_spectrum(p, w));
    w = w < 5 ? w + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EvalSpectrum);

void BM_PropertySummary(benchmark::State& state) {
  const morsekit::MorseParams p(9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::property_summary(p));
}
BENCHMARK(BM_PropertySummary);

void BM_ZeroSkewnessGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::zero_skewness_gamma(20.0));
}
BENCHMARK(BM_ZeroSkewnessGamma)->Unit(benchmark::kMicrosecond);

void BM_QuadratureMoment(benchmark::State& state) {
  const morsekit::MorseParams p(9, 3);
  morsekit::QuadratureOptions q;
  q.hints = {morsekit::peak_frequency(p)};
  auto psi = [&](double w) { return morsekit::eval_spectrum(p, w); };
  const auto weight = state.range(0) ? morsekit::MomentWeight::derivative_energy
                                     : morsekit::MomentWeight::energy;
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::quadrature_moment(psi, 0, weight, q));
}
BENCHMARK(BM_QuadratureMoment)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
