#include <cmath>
#include <numbers>
#include <string>

#include "morsekit/errors.hpp"
#include "morsekit/fft.hpp"
#include "morsekit/morse.hpp"

namespace morsekit {

double dft_bin_frequency(std::size_t k, std::size_t n, double dt) noexcept {
  const double step = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  if (2 * k <= n) return static_cast<double>(k) * step;
  return -static_cast<double>(n - k) * step;
}

std::vector<double> sample_spectrum_on_dft_grid(const MorseParams& p, double scale,
                                                std::size_t n, double dt) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = eval_spectrum(p, scale * dft_bin_frequency(k, n, dt));
  return out;
}

namespace {

SampledWaveform centered_inverse(std::vector<cplx> bins, double dt) {
  const std::size_t n = bins.size();
  const std::vector<cplx> raw = idft(bins);
  const std::size_t center = n / 2;
  SampledWaveform w;
  w.dt = dt;
  w.times.resize(n);
  w.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // raw holds t = 0 at index 0; rotate it to the center sample.
    const std::size_t src = (j + n - center) % n;
    w.values[j] = raw[src] / dt;
    w.times[j] = (static_cast<double>(j) - static_cast<double>(center)) * dt;
  }
  return w;
}

void check_grid(std::size_t n, double dt) {
  if (n < 2) throw Error(ErrorKind::argument, "sample grid needs at least 2 samples");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::argument, "sample spacing dt must be positive and finite");
  }
}

}  // namespace

SampledWaveform sample_from_spectrum(const std::function<double(double)>& spectrum,
                                     std::size_t n, double dt) {
  check_grid(n, dt);
  std::vector<cplx> bins(n);
  for (std::size_t k = 0; k < n; ++k) bins[k] = spectrum(dft_bin_frequency(k, n, dt));
  return centered_inverse(std::move(bins), dt);
}

SampledWaveform sample_wavelet(const MorseParams& p, double scale, std::size_t n, double dt,
                               const SampleOptions& options) {
  if (n < 16) throw Error(ErrorKind::argument, "sample_wavelet needs n >= 16");
  check_grid(n, dt);
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::argument, "sample_wavelet: scale must be positive and finite");
  }
  const double nyquist = std::numbers::pi / dt;
  const double edge = eval_spectrum(p, scale * nyquist) / 2.0;
  if (edge > options.aliasing_threshold) {
    throw Error(ErrorKind::aliasing, "sample_wavelet: Psi(s*omega_nyquist)/2 = " +
                                         std::to_string(edge) + " exceeds threshold " +
                                         std::to_string(options.aliasing_threshold));
  }
  const std::vector<double> spectrum = sample_spectrum_on_dft_grid(p, scale, n, dt);
  return centered_inverse(std::vector<cplx>(spectrum.begin(), spectrum.end()), dt);
}

}  // namespace morsekit
