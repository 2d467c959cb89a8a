#include "morsekit/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "morsekit/errors.hpp"
#include "morsekit/fft.hpp"
#include "morsekit/parallel.hpp"

namespace morsekit {

// -- SignalBuffer -------------------------------------------------------------

SignalBuffer::SignalBuffer(std::vector<std::complex<double>> samples, double dt, bool is_real)
    : samples_(std::move(samples)), dt_(dt), is_real_(is_real) {
  if (samples_.size() < 2) throw Error(ErrorKind::argument, "signal needs at least 2 samples");
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
    throw Error(ErrorKind::argument, "signal dt must be positive and finite");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].real()) || !std::isfinite(samples_[i].imag())) {
      throw Error(ErrorKind::argument, "signal sample " + std::to_string(i) + " is not finite");
    }
  }
}

SignalBuffer SignalBuffer::real(std::vector<double> samples, double dt) {
  return SignalBuffer(std::vector<std::complex<double>>(samples.begin(), samples.end()), dt, true);
}

SignalBuffer SignalBuffer::complex(std::vector<std::complex<double>> samples, double dt) {
  return SignalBuffer(std::move(samples), dt, false);
}

// -- Scale grids --------------------------------------------------------------

ScaleGrid scale_grid(std::size_t signal_length, const MorseParams& p,
                     const ScaleGridOptions& options) {
  if (p.beta() <= 0.0) throw Error(ErrorKind::domain, "scale_grid requires beta > 0");
  if (options.density < 1) throw Error(ErrorKind::argument, "scale_grid: density must be >= 1");
  if (!(options.eta > 0.0 && options.eta < 1.0)) {
    throw Error(ErrorKind::argument, "scale_grid: eta must lie in (0, 1)");
  }
  if (!(options.p0 >= 1.0)) throw Error(ErrorKind::argument, "scale_grid: p0 must be >= 1");
  if (signal_length < 2) throw Error(ErrorKind::argument, "scale_grid: signal too short");

  constexpr double kPi = std::numbers::pi;
  const double wp = peak_frequency(p);
  auto edge = [&](double s) { return eval_spectrum(p, s * kPi) / 2.0; };

  // Psi(s pi) falls monotonically for s beyond omega_p / pi.
  double lo = wp / kPi;
  double hi = 2.0 * lo;
  while (edge(hi) > options.eta) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (edge(mid) > options.eta ? lo : hi) = mid;
  }
  const double s_min = 0.5 * (lo + hi);
  const double s_max =
      static_cast<double>(signal_length) * wp / (2.0 * duration(p) * options.p0);
  if (s_min > s_max) {
    throw Error(ErrorKind::argument,
                "signal of length " + std::to_string(signal_length) +
                    " is too short for this wavelet: smallest scale " + std::to_string(s_min) +
                    " exceeds largest scale " + std::to_string(s_max));
  }

  const double octaves = std::log2(s_max / s_min);
  const auto count = static_cast<std::size_t>(std::lround(options.density * octaves)) + 1;
  std::vector<double> scales(count);
  for (std::size_t j = 0; j < count; ++j) {
    scales[j] = count == 1 ? s_min
                           : s_min * std::exp2(octaves * static_cast<double>(j) /
                                               static_cast<double>(count - 1));
  }
  if (count > 1) scales.back() = s_max;
  return ScaleGrid{std::move(scales), p, options.eta, options.p0, options.density, signal_length};
}

ScaleGrid custom_scale_grid(const MorseParams& p, std::vector<double> scales) {
  if (scales.empty()) throw Error(ErrorKind::argument, "scale grid is empty");
  for (std::size_t j = 0; j < scales.size(); ++j) {
    if (!(scales[j] > 0.0) || !std::isfinite(scales[j]) || (j > 0 && !(scales[j] > scales[j - 1]))) {
      throw Error(ErrorKind::argument, "scales must be positive, finite and strictly increasing");
    }
  }
  return ScaleGrid{std::move(scales), p, 0.0, 0.0, 0, 0};
}

// -- Transform ----------------------------------------------------------------

std::vector<std::complex<double>> CwtResult::column(std::size_t j) const {
  std::vector<std::complex<double>> out(n_times);
  for (std::size_t t = 0; t < n_times; ++t) out[t] = at(t, j);
  return out;
}

double CwtResult::frequency(std::size_t j) const {
  return peak_frequency(grid.params) / (grid.scales.at(j) * dt);
}

namespace {

// Half-sample symmetric reflection of index i into [0, n).
std::size_t reflect(long long i, std::size_t n) {
  const long long period = 2 * static_cast<long long>(n);
  long long m = i % period;
  if (m < 0) m += period;
  if (m >= static_cast<long long>(n)) m = period - 1 - m;
  return static_cast<std::size_t>(m);
}

}  // namespace

CwtResult transform(const SignalBuffer& x, const ScaleGrid& grid, const TransformOptions& options) {
  const std::size_t n = x.size();
  if (grid.scales.empty()) throw Error(ErrorKind::argument, "transform: empty scale grid");
  if (grid.signal_length != 0 && grid.signal_length != n) {
    throw Error(ErrorKind::argument, "transform: grid built for length " +
                                         std::to_string(grid.signal_length) +
                                         " but signal has " + std::to_string(n) + " samples");
  }

  std::size_t padded = n;
  std::size_t offset = 0;
  if (options.boundary != Boundary::periodic) {
    padded = std::max(next_power_of_two(2 * n), next_power_of_two(options.min_padded_length));
    offset = (padded - n) / 2;
  }
  std::vector<std::complex<double>> buffer(padded);
  const auto samples = x.samples();
  switch (options.boundary) {
    case Boundary::periodic:
    case Boundary::zero:
      std::copy(samples.begin(), samples.end(), buffer.begin() + static_cast<long>(offset));
      break;
    case Boundary::mirror:
      for (std::size_t i = 0; i < padded; ++i) {
        buffer[i] = samples[reflect(static_cast<long long>(i) - static_cast<long long>(offset), n)];
      }
      break;
  }

  const FftPlan forward(padded, FftDirection::forward);
  const FftPlan inverse(padded, FftDirection::inverse);
  std::vector<std::complex<double>> spectrum(padded);
  forward.execute(buffer, spectrum);

  const std::size_t ns = grid.scales.size();
  CwtResult result{
      .coefficients = std::vector<std::complex<double>>(n * ns),
      .n_times = n,
      .n_scales = ns,
      .grid = grid,
      .normalization = options.normalization,
      .boundary = options.boundary,
      .dt = x.dt(),
  };
  const double inv_len = 1.0 / static_cast<double>(padded);

  parallel_for(ns, options.threads, [&](std::size_t j) {
    const double s = grid.scales[j];
    const std::vector<double> psi = sample_spectrum_on_dft_grid(grid.params, s, padded, 1.0);
    double gain = inv_len;
    if (options.normalization == Normalization::unitary_n_half) gain *= std::sqrt(s);
    std::vector<std::complex<double>> work(padded), row(padded);
    for (std::size_t k = 0; k < padded; ++k) work[k] = spectrum[k] * (psi[k] * gain);
    inverse.execute(work, row);
    for (std::size_t t = 0; t < n; ++t) result.coefficients[t * ns + j] = row[offset + t];
  });
  return result;
}

SignalBuffer analytic_signal(const SignalBuffer& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> bins = dft(x.samples());
  for (std::size_t k = 1; k < n; ++k) {
    if (2 * k <= n) {
      bins[k] *= 2.0;
    } else {
      bins[k] = 0.0;
    }
  }
  return SignalBuffer::complex(idft(bins), x.dt());
}

RidgeEstimate ridge_frequency_check(const CwtResult& result, double omega0) {
  if (!(omega0 > 0.0)) throw Error(ErrorKind::argument, "ridge check needs omega0 > 0");
  const std::size_t ns = result.n_scales;
  if (ns < 3) throw Error(ErrorKind::argument, "ridge check needs at least 3 scales");
  const std::size_t t0 = result.n_times / 4;
  const std::size_t t1 = result.n_times - result.n_times / 4;

  std::vector<double> mean(ns, 0.0);
  for (std::size_t t = t0; t < t1; ++t) {
    for (std::size_t j = 0; j < ns; ++j) mean[j] += std::abs(result.at(t, j));
  }
  for (double& m : mean) m /= static_cast<double>(t1 - t0);
  const auto best = static_cast<std::size_t>(
      std::distance(mean.begin(), std::max_element(mean.begin(), mean.end())));
  if (best == 0 || best + 1 == ns) {
    throw Error(ErrorKind::domain, "no interior modulus maximum: tone outside the analyzed band");
  }

  double lo = mean[best];
  double hi = mean[best];
  for (std::size_t t = t0; t < t1; ++t) {
    const double v = std::abs(result.at(t, best));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(mean[best] > 0.0) || (hi - lo) > 0.05 * mean[best]) {
    throw Error(ErrorKind::argument, "ridge modulus varies over time: input is not a pure tone");
  }

  const auto& s = result.grid.scales;
  const double wp = peak_frequency(result.grid.params);
  return RidgeEstimate{
      .index = best,
      .scale = s[best],
      .mean_modulus = mean[best],
      .mismatch = std::abs(s[best] * omega0 / wp - 1.0),
      .grid_step = std::max(s[best + 1] / s[best], s[best] / s[best - 1]) - 1.0,
  };
}

}  // namespace morsekit
