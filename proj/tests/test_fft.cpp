#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "morsekit/fft.hpp"
#include "test_support.hpp"

using namespace morsekit;

namespace {

std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -2 * std::numbers::pi * static_cast<double>((j * k) % n) / n;
      acc += x[j] * cplx(std::cos(phase), std::sin(phase));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("matches a direct DFT on odd and even lengths") {
  testing::Gen gen(11);
  for (std::size_t n : {1u, 2u, 7u, 16u, 45u, 128u}) {
    std::vector<cplx> x(n);
    for (auto& v : x) v = {gen.normal(), gen.normal()};
    const auto fast = dft(x);
    const auto slow = naive_dft(x);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-11 * n);
    const auto back = idft(fast);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(back[j] - x[j]) < 1e-13 * n);
  }
}

TEST_CASE("concurrent execution is bit-identical") {
  const std::size_t n = 4096;
  const FftPlan plan(n, FftDirection::forward);
  testing::Gen gen(3);
  std::vector<cplx> x(n);
  for (auto& v : x) v = {gen.normal(), gen.normal()};
  std::vector<cplx> ref(n);
  plan.execute(x, ref);
  std::vector<std::vector<cplx>> outs(8, std::vector<cplx>(n));
  {
    std::vector<std::jthread> pool;
    for (auto& out : outs) pool.emplace_back([&] { plan.execute(x, out); });
  }
  for (const auto& out : outs) CHECK(out == ref);
}

TEST_CASE("in-place execution matches out-of-place") {
  const std::size_t n = 96;
  const FftPlan plan(n, FftDirection::inverse);
  testing::Gen gen(17);
  std::vector<cplx> x(n);
  for (auto& v : x) v = {gen.normal(), gen.normal()};
  std::vector<cplx> out(n);
  plan.execute(x, out);
  plan.execute(x, x);
  CHECK(x == out);
}

TEST_CASE("next power of two") {
  CHECK(next_power_of_two(0) == 1);
  CHECK(next_power_of_two(1) == 1);
  CHECK(next_power_of_two(1000) == 1024);
  CHECK(next_power_of_two(1024) == 1024);
}
