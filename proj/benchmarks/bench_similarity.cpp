#include <benchmark/benchmark.h>

#include "morsekit/superfamily.hpp"

namespace {

void BM_AlphaSqBessel(benchmark::State& state) {
  const auto gmw = morsekit::NamedWavelet::gmw_rescaled({22, 0.1});
  const auto bessel = morsekit::NamedWavelet::bessel();
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::similarity_alpha_sq(gmw, bessel));
}
BENCHMARK(BM_AlphaSqBessel)->Unit(benchmark::kMicrosecond);

void BM_GaussianityMorlet(benchmark::State& state) {
  const auto m = morsekit::NamedWavelet::morlet(morsekit::MorletParams(3));
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::gaussianity_rho_sq(m));
}
BENCHMARK(BM_GaussianityMorlet)->Unit(benchmark::kMicrosecond);

void BM_MorletInversion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::morlet_nu_for_duration(3.0));
}
BENCHMARK(BM_MorletInversion)->Unit(benchmark::kMicrosecond);

void BM_BesselFitCoarse(benchmark::State& state) {
  morsekit::FitOptions o;
  o.beta_points = o.gamma_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::bessel_fit(o));
}
BENCHMARK(BM_BesselFitCoarse)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
