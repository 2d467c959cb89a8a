#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "morsekit/cwt.hpp"

namespace {

morsekit::SignalBuffer noise(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> dist;
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return morsekit::SignalBuffer::real(std::move(x));
}

void BM_Transform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto boundary = static_cast<morsekit::Boundary>(state.range(1));
  const auto x = noise(n);
  const auto grid = morsekit::scale_grid(n, {9, 3}, {.density = 8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(morsekit::transform(x, grid, {.boundary = boundary}));
  }
  state.counters["scales"] = static_cast<double>(grid.size());
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(n * grid.size()));
}
BENCHMARK(BM_Transform)
    ->ArgsProduct({{1024, 16384, 131072}, {0, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_TransformThreads(benchmark::State& state) {
  const std::size_t n = 65536;
  const auto x = noise(n);
  const auto grid = morsekit::scale_grid(n, {9, 3}, {.density = 8});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::transform(x, grid, {.threads = threads}));
}
BENCHMARK(BM_TransformThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ScaleGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morsekit::scale_grid(4096, {9, 3}));
}
BENCHMARK(BM_ScaleGrid);

}  // namespace
