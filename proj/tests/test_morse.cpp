#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "morsekit/errors.hpp"
#include "morsekit/fft.hpp"
#include "morsekit/morse.hpp"
#include "test_support.hpp"

using namespace morsekit;
using testing::rel_err;

namespace {

constexpr double kE = std::numbers::e;

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  return v;
}

// 5-point central stencils for the first four derivatives.
double fd(const std::function<double(double)>& f, double x, double h, int order) {
  const double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  switch (order) {
    case 1: return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    case 2: return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
    case 3: return (-fm2 + 2 * fm1 - 2 * fp1 + fp2) / (2 * h * h * h);
    default: return (fm2 - 4 * fm1 + 6 * f0 - 4 * fp1 + fp2) / (h * h * h * h);
  }
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MorseParams(1.0, 0.0), Error);
  CHECK_THROWS_AS(MorseParams(-0.1, 1.0), Error);
  CHECK_THROWS_AS(MorseParams(std::nan(""), 1.0), Error);
  CHECK_NOTHROW(MorseParams(0.0, 2.0));
  CHECK(MorseParams(3, 3).in_localization_region());
  CHECK_FALSE(MorseParams(0.5, 3).in_localization_region());
}

TEST_CASE("peak frequency examples") {
  CHECK(peak_frequency({3, 3}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel_err(peak_frequency({9, 3}), std::cbrt(3.0)) < 1e-14);
  try {
    (void)peak_frequency({0, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  // Dense-grid argmax agrees with the closed form.
  const MorseParams p(9, 3);
  double best_w = 0, best_v = -1;
  for (int i = 1; i < 200000; ++i) {
    const double w = i * 1e-5 * 3.0;
    const double v = eval_spectrum(p, w);
    if (v > best_v) best_v = v, best_w = w;
  }
  CHECK(std::abs(best_w - peak_frequency(p)) < 2e-5);
  CHECK(rel_err(half_power_frequency({0, 2}), std::sqrt(std::log(2.0))) < 1e-14);
}

TEST_CASE("duration and amplitude examples") {
  CHECK(duration({3, 3}) == 3.0);
  CHECK(duration({1, 1}) == 1.0);
  CHECK(duration({9, 1}) == 3.0);
  CHECK(duration({9, 1}) == duration({1, 9}));
  CHECK(rel_err(amplitude_constant({1, 1}), 2 * kE) < 1e-14);
  CHECK(amplitude_constant({0, 0.7}) == 2.0);
  CHECK(amplitude_constant({0, 5}) == 2.0);
}

TEST_CASE("spectrum examples") {
  CHECK(eval_spectrum({2, 3}, -1.0) == 0.0);
  CHECK(eval_spectrum({2, 3}, 0.0) == 0.0);
  CHECK(eval_spectrum({0, 3}, 0.0) == 0.0);
  CHECK(rel_err(eval_spectrum({1, 1}, 2.0), 4.0 / kE) < 1e-14);
  CHECK(rel_err(eval_spectrum({9, 3}, peak_frequency({9, 3})), 2.0) < 1e-14);
  CHECK(rel_err(eval_rescaled_spectrum({1, 1}, 2.0), 4.0 / kE) < 1e-14);
  CHECK(eval_rescaled_spectrum({7, 0.4}, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(eval_rescaled_spectrum({7, 0.4}, 0.0) == 0.0);
  CHECK(eval_rescaled_spectrum({7, 0.4}, -3.0) == 0.0);
}

TEST_CASE("normalization and peak across the parameter range") {
  for (double beta : log_points(1e-3, 500, 25)) {
    for (double gamma : log_points(0.02, 20, 25)) {
      const MorseParams p(beta, gamma);
      const double wp = peak_frequency(p);
      INFO("beta=" << beta << " gamma=" << gamma);
      CHECK(rel_err(eval_spectrum(p, wp), 2.0) < 1e-12);
      CHECK(eval_spectrum(p, wp * (1 + 1e-3)) < 2.0);
      CHECK(eval_spectrum(p, wp * (1 - 1e-3)) < 2.0);
      // d2 ~ 1/omega_p^2 underflows once omega_p passes ~1e154.
      const double d2 = log_spectrum_derivatives(p, 2)[1];
      if (std::isnormal(d2)) CHECK(rel_err(std::sqrt(-(wp * d2) * wp), duration(p)) < 1e-10);
    }
  }
}

TEST_CASE("log-spectrum derivatives") {
  for (double beta : {0.5, 1.0, 3.0, 9.0, 27.0}) {
    for (double gamma : {0.5, 1.0, 2.0, 3.0, 6.0}) {
      const MorseParams p(beta, gamma);
      const double wp = peak_frequency(p);
      const auto d = log_spectrum_derivatives(p, 4);
      REQUIRE(d.size() == 4);
      CHECK(d[0] == 0.0);
      CHECK(rel_err(d[1], -beta * gamma / (wp * wp)) < 1e-12);
      if (gamma == 3.0) CHECK(std::abs(d[2]) < 1e-12 * std::abs(d[1]) / wp);

      // Orders 1 and 2 straight from ln eval_spectrum.
      const double h = 1e-4 * wp;
      auto ln_psi = [&](double w) { return std::log(eval_spectrum(p, w)); };
      CHECK(std::abs(fd(ln_psi, wp, h, 1)) < 1e-8 * std::abs(d[1]) * wp);
      CHECK(rel_err(fd(ln_psi, wp, h, 2), d[1]) < 1e-6);

      // Orders 3 and 4 through the offset form, chain rule d/dw = (1/wp) d/dx.
      auto g = [&](double x) { return log_peak_ratio(p, x); };
      const double hx = 1e-4;
      if (gamma != 3.0) CHECK(rel_err(fd(g, 0.0, hx, 3) / std::pow(wp, 3), d[2]) < 1e-6);
      CHECK(rel_err(fd(g, 0.0, hx, 4) / std::pow(wp, 4), d[3]) < 1e-6);
    }
  }
  CHECK_THROWS_AS(log_spectrum_derivatives({3, 3}, 0), Error);
  CHECK_THROWS_AS(log_spectrum_derivatives({3, 3}, 11), Error);
}

TEST_CASE("expansion coefficients") {
  CHECK(expansion_coeffs({3, 1}).cubic == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expansion_coeffs({3, 3}).quartic == doctest::Approx(-0.75).epsilon(1e-14));
  for (double beta : {0.7, 3.0, 40.0, 300.0}) {
    const auto c = expansion_coeffs({beta, 3});
    CHECK(std::abs(c.cubic) <= 1e-12);
    CHECK(rel_err(c.duration_sq, 3 * beta) < 1e-14);
  }
  // At fixed P the quartic magnitude is smallest at gamma = 3.
  const double P = 4.0;
  double best_gamma = 0, best_mag = INFINITY;
  for (double gamma = 0.5; gamma <= 8.0; gamma += 0.125) {
    const double mag = std::abs(expansion_coeffs({P * P / gamma, gamma}).quartic);
    if (mag < best_mag) best_mag = mag, best_gamma = gamma;
  }
  CHECK(best_gamma == 3.0);
}

TEST_CASE("Gaussian and quartic approximants") {
  const MorseParams p(3, 3);
  const double wp = peak_frequency(p);
  CHECK(approx_spectrum(p, wp, ApproxOrder::gaussian) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(approx_spectrum(p, wp, ApproxOrder::quartic) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rel_err(approx_spectrum(p, 2 * wp, ApproxOrder::gaussian), 2 * std::exp(-4.5)) < 1e-13);
  for (double x : {-0.3, -0.1, 0.05, 0.2, 0.6}) {
    const double w = wp * (1 + x);
    const double q = expansion_coeffs(p).quartic;
    CHECK(rel_err(approx_spectrum(p, w, ApproxOrder::quartic),
                  approx_spectrum(p, w, ApproxOrder::gaussian) * std::exp(q * std::pow(x, 4))) <
          1e-12);
  }
  // The quartic approximant tracks the spectrum better near the peak.
  const MorseParams q(5, 1.5);
  const double wq = peak_frequency(q);
  for (double x : {-0.15, 0.15}) {
    const double w = wq * (1 + x);
    const double exact = eval_spectrum(q, w);
    CHECK(std::abs(approx_spectrum(q, w, ApproxOrder::quartic) - exact) <
          std::abs(approx_spectrum(q, w, ApproxOrder::gaussian) - exact));
  }
}

TEST_CASE("sampled wavelet: zero mean and Hermitian symmetry") {
  for (auto [beta, gamma] : {std::pair{1.0, 1.0}, {3.0, 3.0}, {9.0, 3.0}, {27.0, 27.0}, {2.0, 6.0}}) {
    const MorseParams p(beta, gamma);
    const std::size_t n = 2048;
    const double dt = 0.5 / peak_frequency(p) * 0.5;
    const auto w = sample_wavelet(p, 1.0, n, dt);
    REQUIRE(w.values.size() == n);
    CHECK(w.times[w.center_index()] == 0.0);
    double peak = 0;
    std::complex<double> sum = 0;
    for (auto v : w.values) peak = std::max(peak, std::abs(v)), sum += v * dt;
    INFO("beta=" << beta << " gamma=" << gamma);
    CHECK(std::abs(sum) < 1e-10 * peak);
    const std::size_t c = w.center_index();
    for (std::size_t k = 1; k < c; ++k) {
      CHECK(std::abs(std::abs(w.values[c + k]) - std::abs(w.values[c - k])) <= 1e-10 * peak);
    }
  }
}

TEST_CASE("sampled wavelet: aliasing guard") {
  const MorseParams p(3, 3);
  try {
    (void)sample_wavelet(p, 0.2, 256, 1.0);
    FAIL("expected aliasing error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::aliasing);
  }
  CHECK_NOTHROW(sample_wavelet(p, 0.2, 256, 1.0, SampleOptions{.aliasing_threshold = 1.0}));
}

TEST_CASE("sampled wavelet: DFT round trip") {
  const MorseParams p(4, 2);
  const std::size_t n = 1024;
  const double s = 6.0;
  const auto w = sample_wavelet(p, s, n, 1.0);
  // Undo the centering rotation, then transform forward.
  std::vector<cplx> unrotated(n);
  for (std::size_t i = 0; i < n; ++i) unrotated[i] = w.values[(i + w.center_index()) % n];
  const auto spectrum = dft(unrotated);
  const auto expected = sample_spectrum_on_dft_grid(p, s, n, 1.0);
  double scale = 0;
  for (double v : expected) scale = std::max(scale, v);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(spectrum[k] - expected[k]) <= 1e-10 * scale);
  }
  CHECK(dft_bin_frequency(n / 2, n, 1.0) == doctest::Approx(std::numbers::pi));
  CHECK(dft_bin_frequency(n / 2 + 1, n, 1.0) < 0.0);
}

TEST_CASE("sampled wavelet: central window") {
  // Near its peak the (9,3) spectrum is Gaussian with width omega_p/P, so the
  // envelope is exp(-(t omega_p / P)^2 / 2): e^-2 at 2P/omega_p and e^-4.5
  // at 3P/omega_p. The bound is checked against those values.
  const MorseParams p(9, 3);
  const double wp = peak_frequency(p), P = duration(p);
  const auto w = sample_wavelet(p, 1.0, 8192, 0.02);
  const std::size_t c = w.center_index();
  const double at0 = std::abs(w.values[c]);
  double beyond2 = 0, beyond3 = 0;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const double t = std::abs(w.times[i]);
    const double r = std::abs(w.values[i]) / at0;
    if (t > 2 * P / wp) beyond2 = std::max(beyond2, r);
    if (t > 3 * P / wp) beyond3 = std::max(beyond3, r);
  }
  CHECK(beyond2 < 1.05 * std::exp(-2.0));
  CHECK(beyond3 < 0.01);
}

TEST_CASE("sampled wavelet: power-law time decay") {
  const std::size_t n = std::size_t{1} << 20;
  const double dt = 0.01;
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    const MorseParams p(beta, 3);
    const double wp = peak_frequency(p), P = duration(p);
    const auto w = sample_wavelet(p, 1.0, n, dt);
    double lo = INFINITY, hi = 0;
    for (std::size_t i = w.center_index(); i < n; ++i) {
      const double t = w.times[i];
      if (t < 10 * P / wp || t > 20 * P / wp) continue;
      const double v = std::abs(w.values[i]) * std::pow(t, beta + 1);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    INFO("beta=" << beta);
    REQUIRE(lo > 0);
    CHECK(hi / lo < 1.25);
  }
}

TEST_CASE("near the analytic filter corner") {
  const MorseParams p(1e-6, 1e-6);
  for (double w = 0.5; w <= 2.0; w += 0.125) CHECK(std::abs(eval_spectrum(p, w) - 2.0) < 1e-4);
}
