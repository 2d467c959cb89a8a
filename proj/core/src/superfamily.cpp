#include "morsekit/superfamily.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "morsekit/errors.hpp"

namespace morsekit {
namespace {

constexpr double kPi = std::numbers::pi;

// e^{-(w-nu)^2/2} (1 - e^{-w nu}) without overflow for large negative w.
double morlet_base(double nu, double omega) {
  const double d = omega - nu;
  const double envelope = std::exp(-0.5 * d * d);
  if (omega * nu >= -1.0) return envelope * -std::expm1(-omega * nu);
  return envelope - std::exp(-0.5 * (omega * omega + nu * nu));
}

double morlet_base_derivative(double nu, double omega) {
  const double d = omega - nu;
  return -d * std::exp(-0.5 * d * d) + omega * std::exp(-0.5 * (omega * omega + nu * nu));
}

// Root function of Psi' = 0 divided by the Gaussian envelope and its derivative.
std::pair<double, double> morlet_peak_equation(double nu, double omega) {
  const double x = omega * nu;
  const double em = std::expm1(x);
  const double value = nu - omega + nu / em;
  // e^x / (e^x - 1)^2 written to stay finite for large x.
  const double slope = -1.0 - nu * nu / (em * -std::expm1(-x));
  return {value, slope};
}

std::vector<double> merged_features(const NamedWavelet& a, const NamedWavelet& b) {
  std::vector<double> out = a.features();
  const std::vector<double> more = b.features();
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double squared_inner_product(const RealFunction& f, const RealFunction& g,
                             std::vector<double> hints, bool real_line,
                             const QuadratureOptions& base) {
  QuadratureOptions options = base;
  options.hints = std::move(hints);
  auto integrate = [&](const RealFunction& h) {
    return real_line ? integrate_real_line(h, options).value
                     : integrate_half_line(h, options).value;
  };
  const double cross = integrate([&](double w) { return f(w) * g(w); });
  const double ff = integrate([&](double w) {
    const double v = f(w);
    return v * v;
  });
  const double gg = integrate([&](double w) {
    const double v = g(w);
    return v * v;
  });
  if (!(ff > 0.0) || !(gg > 0.0)) {
    throw Error(ErrorKind::domain, "similarity: spectrum has zero energy");
  }
  return (cross * cross) / (ff * gg);
}

}  // namespace

// -- Morlet ------------------------------------------------------------------

MorletParams::MorletParams(double nu) : nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorKind::domain, "Morlet nu must be positive and finite (got " +
                                       std::to_string(nu) + ")");
  }
}

MorletPeak morlet_peak_and_duration(const MorletParams& m) {
  const double nu = m.nu();
  if (nu < 0.1) {
    throw Error(ErrorKind::domain, "morlet_peak_and_duration requires nu >= 0.1");
  }
  const double lo = nu;
  const double hi = nu + nu / std::expm1(nu * nu);
  double peak = nu;
  if (hi > lo) {
    boost::uintmax_t iterations = 100;
    peak = boost::math::tools::newton_raphson_iterate(
        [nu](double w) { return morlet_peak_equation(nu, w); }, nu, lo, hi, 42, iterations);
    const double residual = morlet_peak_equation(nu, peak).first;
    if (iterations >= 100 || !std::isfinite(peak) || std::abs(residual) > 1e-9 * (1.0 + nu)) {
      throw Error(ErrorKind::convergence, "Morlet peak search did not converge in [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) +
                                              "]");
    }
  }
  // -w^2 Psi''/Psi with both divided by the envelope.
  const double d = peak - nu;
  const double decay = std::exp(-peak * nu);
  const double second = d * d - 1.0 + (1.0 - peak * peak) * decay;
  const double value = -std::expm1(-peak * nu);
  return MorletPeak{peak, std::sqrt(-peak * peak * second / value)};
}

double morlet_amplitude(const MorletParams& m) {
  return 2.0 / morlet_base(m.nu(), morlet_peak_and_duration(m).peak_frequency);
}

double morlet_spectrum(const MorletParams& m, double omega) {
  return morlet_amplitude(m) * morlet_base(m.nu(), omega);
}

double morlet_spectrum_derivative(const MorletParams& m, double omega) {
  return morlet_amplitude(m) * morlet_base_derivative(m.nu(), omega);
}

double morlet_nu_for_duration(double duration) {
  constexpr double kLo = 0.1;
  constexpr double kHi = 50.0;
  auto f = [duration](double nu) {
    return morlet_peak_and_duration(MorletParams(nu)).duration - duration;
  };
  const double f_lo = f(kLo);
  const double f_hi = f(kHi);
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw Error(ErrorKind::domain, "no Morlet wavelet with duration " + std::to_string(duration) +
                                       " for nu in [0.1, 50] (range " +
                                       std::to_string(f_lo + duration) + " to " +
                                       std::to_string(f_hi + duration) + ")");
  }
  if (f_lo == 0.0) return kLo;
  if (f_hi == 0.0) return kHi;
  boost::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, kLo, kHi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(48), iterations);
  return 0.5 * (a + b);
}

PropertySummary morlet_properties(const MorletParams& m, const QuadratureOptions& options) {
  const MorletPeak peak = morlet_peak_and_duration(m);
  const double amplitude = 2.0 / morlet_base(m.nu(), peak.peak_frequency);
  const double nu = m.nu();
  QuadratureOptions opts = options;
  opts.hints = {peak.peak_frequency};
  PropertySummary s = quadrature_properties(
      [amplitude, nu](double w) { return amplitude * morlet_base(nu, w); },
      [amplitude, nu](double w) { return amplitude * morlet_base_derivative(nu, w); },
      Support::real_line, opts);
  s.peak_frequency = peak.peak_frequency;
  s.duration = peak.duration;
  return s;
}

// -- Limiting and related spectra -------------------------------------------

double lognormal_spectrum(double duration, double omega) {
  if (!(duration > 0.0)) throw Error(ErrorKind::domain, "lognormal duration must be positive");
  if (!(omega > 0.0)) return 0.0;
  const double l = std::log(omega);
  return 2.0 * std::exp(-0.5 * duration * duration * l * l);
}

double shannon_spectrum(double omega) { return (omega > 0.0 && omega <= 1.0) ? 2.0 : 0.0; }

std::complex<double> shannon_time(double t) {
  const double half = 0.5 * t;
  const double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
  return (sinc / kPi) * std::complex<double>(std::cos(half), std::sin(half));
}

double bessel_spectrum(double omega) {
  if (!(omega > 0.0)) return 0.0;
  return 2.0 * std::exp(2.0 - (omega + 1.0 / omega));
}

double analytic_filter_spectrum(double omega) {
  if (omega > 0.0) return 2.0;
  return omega == 0.0 ? 1.0 : 0.0;
}

SampledWaveform analytic_filter_realization(std::size_t n, double dt) {
  return sample_from_spectrum(analytic_filter_spectrum, n, dt);
}

// -- Named wavelets ----------------------------------------------------------

std::string to_string(WaveletKind kind) {
  switch (kind) {
    case WaveletKind::gmw: return "gmw";
    case WaveletKind::morlet: return "morlet";
    case WaveletKind::lognormal: return "lognormal";
    case WaveletKind::shannon: return "shannon";
    case WaveletKind::bessel: return "bessel";
    case WaveletKind::analytic_filter: return "analytic_filter";
  }
  return "unknown";
}

NamedWavelet NamedWavelet::gmw(const MorseParams& p) { return {WaveletKind::gmw, p}; }

NamedWavelet NamedWavelet::gmw_rescaled(const MorseParams& p) {
  return gmw(p).scaled(morsekit::peak_frequency(p));
}

NamedWavelet NamedWavelet::morlet(const MorletParams& m) { return {WaveletKind::morlet, m}; }

NamedWavelet NamedWavelet::lognormal(double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorKind::domain, "lognormal duration must be positive and finite");
  }
  return {WaveletKind::lognormal, LognormalParams{duration}};
}

NamedWavelet NamedWavelet::shannon() { return {WaveletKind::shannon, std::monostate{}}; }
NamedWavelet NamedWavelet::bessel() { return {WaveletKind::bessel, std::monostate{}}; }
NamedWavelet NamedWavelet::analytic_filter() {
  return {WaveletKind::analytic_filter, std::monostate{}};
}

NamedWavelet NamedWavelet::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::argument, "frequency scale must be positive and finite");
  }
  NamedWavelet out = *this;
  out.scale_ = scale_ * c;
  return out;
}

double NamedWavelet::spectrum(double omega) const {
  const double w = scale_ * omega;
  switch (kind_) {
    case WaveletKind::gmw: return eval_spectrum(std::get<MorseParams>(params_), w);
    case WaveletKind::morlet: return morlet_spectrum(std::get<MorletParams>(params_), w);
    case WaveletKind::lognormal:
      return lognormal_spectrum(std::get<LognormalParams>(params_).duration, w);
    case WaveletKind::shannon: return shannon_spectrum(w);
    case WaveletKind::bessel: return bessel_spectrum(w);
    case WaveletKind::analytic_filter: return analytic_filter_spectrum(w);
  }
  return 0.0;
}

RealFunction NamedWavelet::spectrum_function() const {
  const double c = scale_;
  switch (kind_) {
    case WaveletKind::gmw: {
      const MorseParams p = std::get<MorseParams>(params_);
      return [p, c](double w) { return eval_spectrum(p, c * w); };
    }
    case WaveletKind::morlet: {
      // Hoist the amplitude: it costs a root solve.
      const double nu = std::get<MorletParams>(params_).nu();
      const double a = morlet_amplitude(std::get<MorletParams>(params_));
      return [nu, a, c](double w) { return a * morlet_base(nu, c * w); };
    }
    default: {
      const NamedWavelet self = *this;
      return [self](double w) { return self.spectrum(w); };
    }
  }
}

std::optional<double> NamedWavelet::peak_frequency() const {
  switch (kind_) {
    case WaveletKind::gmw: {
      const auto& p = std::get<MorseParams>(params_);
      if (p.beta() == 0.0) return std::nullopt;
      return morsekit::peak_frequency(p) / scale_;
    }
    case WaveletKind::morlet:
      return morlet_peak_and_duration(std::get<MorletParams>(params_)).peak_frequency / scale_;
    case WaveletKind::lognormal:
    case WaveletKind::bessel: return 1.0 / scale_;
    default: return std::nullopt;
  }
}

std::optional<double> NamedWavelet::duration() const {
  switch (kind_) {
    case WaveletKind::gmw: {
      const auto& p = std::get<MorseParams>(params_);
      if (p.beta() == 0.0) return std::nullopt;
      return morsekit::duration(p);
    }
    case WaveletKind::morlet: return morlet_peak_and_duration(std::get<MorletParams>(params_)).duration;
    case WaveletKind::lognormal: return std::get<LognormalParams>(params_).duration;
    case WaveletKind::bessel: return std::numbers::sqrt2;
    default: return std::nullopt;
  }
}

std::vector<double> NamedWavelet::features() const {
  switch (kind_) {
    case WaveletKind::shannon: return {0.5 / scale_, 1.0 / scale_};
    case WaveletKind::analytic_filter: return {1.0 / scale_};
    case WaveletKind::gmw:
      if (std::get<MorseParams>(params_).beta() == 0.0) {
        return {half_power_frequency(std::get<MorseParams>(params_)) / scale_};
      }
      [[fallthrough]];
    default: return {*peak_frequency()};
  }
}

std::string NamedWavelet::label() const {
  switch (kind_) {
    case WaveletKind::gmw: {
      const auto& p = std::get<MorseParams>(params_);
      return "gmw(" + std::to_string(p.beta()) + "," + std::to_string(p.gamma()) + ")";
    }
    case WaveletKind::morlet:
      return "morlet(" + std::to_string(std::get<MorletParams>(params_).nu()) + ")";
    case WaveletKind::lognormal:
      return "lognormal(" + std::to_string(std::get<LognormalParams>(params_).duration) + ")";
    default: return to_string(kind_);
  }
}

// -- Similarity functionals --------------------------------------------------

double similarity_alpha_sq(const NamedWavelet& w1, const NamedWavelet& w2,
                           const QuadratureOptions& options) {
  if (!w1.square_integrable() || !w2.square_integrable()) {
    throw Error(ErrorKind::domain, "similarity requires square-integrable spectra");
  }
  // Products commute exactly in floating point and the hints are sorted, so
  // swapping the arguments repeats the same operations.
  return squared_inner_product(w1.spectrum_function(), w2.spectrum_function(),
                               merged_features(w1, w2), w1.two_sided() || w2.two_sided(),
                               options);
}

double gaussianity_rho_sq(const NamedWavelet& w, const QuadratureOptions& options) {
  const std::optional<double> peak = w.peak_frequency();
  const std::optional<double> dur = w.duration();
  if (!peak || !dur) {
    throw Error(ErrorKind::domain, "gaussianity requires a wavelet with a peak and a duration");
  }
  const double wp = *peak;
  const double p2 = *dur * *dur;
  auto gaussian = [wp, p2](double omega) {
    const double x = omega / wp - 1.0;
    return 2.0 * std::exp(-0.5 * p2 * x * x);
  };
  return squared_inner_product(w.spectrum_function(), gaussian, w.features(), w.two_sided(),
                               options);
}

// -- Limits ------------------------------------------------------------------

std::vector<LimitRow> limit_diagnostics(double duration, const std::vector<double>& gammas) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorKind::domain, "limit_diagnostics: duration must be positive");
  }
  constexpr int kPoints = 1976;  // 0.05, 0.052, ..., 4.0
  std::vector<LimitRow> rows;
  rows.reserve(gammas.size());
  for (double g : gammas) {
    const MorseParams p(duration * duration / g, g);
    LimitRow row{g, p.beta(), g <= 1.0 ? LimitTarget::lognormal : LimitTarget::shannon, 0.0, 0.0};
    for (int k = 0; k < kPoints; ++k) {
      const double w = 0.05 + 0.002 * k;
      const double phi = eval_rescaled_spectrum(p, w);
      row.lognormal_deviation =
          std::max(row.lognormal_deviation, std::abs(phi - lognormal_spectrum(duration, w)));
      if (std::abs(w - 1.0) >= 0.05) {
        row.shannon_deviation = std::max(row.shannon_deviation, std::abs(phi - shannon_spectrum(w)));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double relative_bandwidth(const MorseParams& p) { return sigma_omega(p) / peak_frequency(p); }

}  // namespace morsekit
