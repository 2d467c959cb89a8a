#include "morsekit/morse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "detail.hpp"
#include "morsekit/errors.hpp"

namespace morsekit {

MorseParams::MorseParams(double beta, double gamma) : beta_(beta), gamma_(gamma) {
  if (!std::isfinite(beta) || !std::isfinite(gamma) || beta < 0.0 || gamma <= 0.0) {
    throw Error(ErrorKind::domain, "MorseParams requires finite beta >= 0 and gamma > 0 (got beta=" +
                                       std::to_string(beta) + ", gamma=" + std::to_string(gamma) +
                                       ")");
  }
}

bool MorseParams::in_localization_region() const noexcept {
  return gamma_ >= 1.0 && beta_ > (gamma_ - 1.0) / 2.0;
}

double log_peak_frequency(const MorseParams& p) {
  if (p.beta() == 0.0) {
    throw Error(ErrorKind::domain,
                "beta = 0 spectrum has no interior maximum; use half_power_frequency");
  }
  return (std::log(p.beta()) - std::log(p.gamma())) / p.gamma();
}

double peak_frequency(const MorseParams& p) { return std::exp(log_peak_frequency(p)); }

double half_power_frequency(const MorseParams& p) {
  const double g = p.gamma();
  if (p.beta() == 0.0) return std::pow(std::numbers::ln2, 1.0 / g);
  // Upper flank: (beta/gamma) * (e^y - 1 - y) = ln 2 with y = gamma ln(omega/omega_p) > 0.
  const double target = g * std::numbers::ln2 / p.beta();
  double lo = 0.0;
  double hi = 1.0;
  while (detail::expm1_minus_linear(hi) < target) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (detail::expm1_minus_linear(mid) < target ? lo : hi) = mid;
  }
  return std::exp(log_peak_frequency(p) + 0.5 * (lo + hi) / g);
}

double duration(const MorseParams& p) { return std::sqrt(p.beta() * p.gamma()); }

double log_amplitude_constant(const MorseParams& p) {
  const double b = p.beta();
  const double g = p.gamma();
  if (b == 0.0) return std::numbers::ln2;
  return std::numbers::ln2 + b / g * (1.0 + std::log(g) - std::log(b));
}

double amplitude_constant(const MorseParams& p) { return std::exp(log_amplitude_constant(p)); }

double eval_spectrum(const MorseParams& p, double omega) {
  if (std::isnan(omega)) return omega;
  if (omega <= 0.0) return 0.0;
  const double b = p.beta();
  const double g = p.gamma();
  if (b == 0.0) return 2.0 * std::exp(-std::exp(g * std::log(omega)));
  const double log_ratio = std::log(omega) - log_peak_frequency(p);
  return 2.0 * std::exp(-(b / g) * detail::expm1_minus_linear(g * log_ratio));
}

double eval_rescaled_spectrum(const MorseParams& p, double omega) {
  if (p.beta() == 0.0) {
    throw Error(ErrorKind::domain, "rescaled spectrum requires beta > 0");
  }
  if (std::isnan(omega)) return omega;
  if (omega <= 0.0) return 0.0;
  const double g = p.gamma();
  return 2.0 * std::exp(-(p.beta() / g) * detail::expm1_minus_linear(g * std::log(omega)));
}

double log_peak_ratio(const MorseParams& p, double x) {
  if (p.beta() == 0.0) {
    throw Error(ErrorKind::domain, "log_peak_ratio requires beta > 0");
  }
  if (!(x > -1.0)) {
    throw Error(ErrorKind::domain, "log_peak_ratio requires x > -1");
  }
  const double g = p.gamma();
  return -(p.beta() / g) * detail::expm1_minus_linear(g * std::log1p(x));
}

std::vector<double> log_spectrum_derivatives(const MorseParams& p, int n_max) {
  if (n_max < 1 || n_max > 10) {
    throw Error(ErrorKind::argument, "log_spectrum_derivatives: n_max must be in [1, 10]");
  }
  const double b = p.beta();
  const double g = p.gamma();
  const double log_peak = log_peak_frequency(p);

  // d^n ln Psi = (-1)^(n-1) (n-1)! beta / w^n - g(g-1)...(g-n+1) w^(g-n).
  // With w_p^g = beta/g both terms share the factor beta / w_p^n.
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  double factorial = 1.0;  // (n-1)!
  double falling = 1.0;    // (g-1)(g-2)...(g-n+1)
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      factorial *= n - 1;
      falling *= g - (n - 1);
    }
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    const double bracket = sign * factorial - falling;
    out.push_back(b * bracket * std::exp(-n * log_peak));
  }
  return out;
}

ExpansionCoeffs expansion_coeffs(const MorseParams& p) {
  if (p.beta() == 0.0) {
    throw Error(ErrorKind::domain, "expansion_coeffs requires beta > 0");
  }
  const double g = p.gamma();
  const double p2 = p.beta() * g;
  return ExpansionCoeffs{
      .duration_sq = p2,
      .cubic = -(g - 3.0) * p2 / 6.0,
      .quartic = -((g - 3.0) * (g - 3.0) + 2.0) * p2 / 24.0,
  };
}

double approx_spectrum(const MorseParams& p, double omega, ApproxOrder order) {
  const ExpansionCoeffs c = expansion_coeffs(p);
  const double x = omega / peak_frequency(p) - 1.0;
  const double x2 = x * x;
  double exponent = -0.5 * c.duration_sq * x2;
  if (order == ApproxOrder::quartic) {
    exponent += c.cubic * x2 * x + c.quartic * x2 * x2;
  }
  return 2.0 * std::exp(exponent);
}

}  // namespace morsekit
