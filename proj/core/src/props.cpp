#include "morsekit/props.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "morsekit/errors.hpp"

namespace morsekit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// m_{k} / m_0 for the energy density: Gamma((r0+k)/g) / Gamma(r0/g) 2^(-k/g),
// r0 = 2 beta + 1. Valid for real k with r0 + k > 0.
double moment_ratio(const MorseParams& p, double k) {
  const double g = p.gamma();
  const double r0 = 2.0 * p.beta() + 1.0;
  return std::exp(std::lgamma((r0 + k) / g) - std::lgamma(r0 / g) - k / g * std::numbers::ln2);
}

struct Central {
  double mean;
  double variance;
  double third;
};

Central central_moments(const MorseParams& p) {
  const double r1 = moment_ratio(p, 1.0);
  const double r2 = moment_ratio(p, 2.0);
  const double r3 = moment_ratio(p, 3.0);
  return Central{r1, std::max(0.0, r2 - r1 * r1), r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1};
}

// Ridders from h0, restarted with smaller steps while its own error estimate
// says the extrapolation failed (steep tails need steps far below w/4).
double stable_derivative(const RealFunction& f, double w, double h0) {
  // Ridders can report a tiny error for a step far wider than the feature
  // (double-exponential tails), so two successive steps must also agree.
  double best = 0.0;
  double best_error = std::numeric_limits<double>::infinity();
  double previous = std::numeric_limits<double>::quiet_NaN();
  double h = h0;
  for (int attempt = 0; attempt < 10; ++attempt, h *= 0.125) {
    double error = 0.0;
    const double d = ridders_derivative(f, w, h, &error);
    const double tol = 1e-10 * std::abs(d);
    if (std::abs(d - previous) <= tol && error <= 10.0 * tol) return d;
    if (attempt > 0 && error < best_error) {
      best = d;
      best_error = error;
    }
    previous = d;
  }
  return best;
}

}  // namespace

double log_energy_moment(const MorseParams& p, int n) {
  const double r = 2.0 * p.beta() + n + 1.0;
  if (n < -2 || !(r > 0.0)) {
    throw Error(ErrorKind::domain, "energy_moment: 2*beta + n + 1 must be positive (n=" +
                                       std::to_string(n) + ", beta=" + std::to_string(p.beta()) +
                                       ")");
  }
  const double g = p.gamma();
  return 2.0 * log_amplitude_constant(p) + std::lgamma(r / g) - std::log(g) -
         r / g * std::numbers::ln2;
}

double energy_moment(const MorseParams& p, int n) { return std::exp(log_energy_moment(p, n)); }

MomentTable moment_table(const MorseParams& p, std::span<const int> orders) {
  MomentTable table{p, {}};
  for (int n : orders) table.moments.emplace(n, energy_moment(p, n));
  return table;
}

double mean_frequency(const MorseParams& p) { return moment_ratio(p, 1.0); }

double sigma_omega(const MorseParams& p) { return std::sqrt(central_moments(p).variance); }

double sigma_t(const MorseParams& p) {
  const double b = p.beta();
  if (b <= 0.5) return kInf;
  const double g = p.gamma();
  // |Psi'|^2 = a^2 e^{-2w^g} (b^2 w^{2b-2} - 2bg w^{2b+g-2} + g^2 w^{2b+2g-2}),
  // each term normalized by m_0.
  const double variance = b * b * moment_ratio(p, -2.0) - 2.0 * b * g * moment_ratio(p, g - 2.0) +
                          g * g * moment_ratio(p, 2.0 * g - 2.0);
  return std::sqrt(std::max(0.0, variance));
}

double heisenberg_area(const MorseParams& p) {
  const double st = sigma_t(p);
  if (std::isinf(st)) return kInf;
  return st * sigma_omega(p);
}

double skewness_freq(const MorseParams& p) {
  const Central c = central_moments(p);
  return c.third / std::pow(c.variance, 1.5);
}

PropertySummary property_summary(const MorseParams& p) {
  PropertySummary s;
  s.peak_frequency = peak_frequency(p);
  s.duration = duration(p);
  s.mean_frequency = mean_frequency(p);
  s.sigma_t = sigma_t(p);
  s.sigma_omega = sigma_omega(p);
  s.heisenberg_area = std::isinf(s.sigma_t) ? kInf : s.sigma_t * s.sigma_omega;
  s.skewness = skewness_freq(p);
  return s;
}

std::optional<double> zero_skewness_gamma(double beta, double gamma_lo, double gamma_hi) {
  if (!(beta > 0.0) || !(gamma_lo > 0.0) || !(gamma_hi > gamma_lo)) {
    throw Error(ErrorKind::argument, "zero_skewness_gamma: need beta > 0 and 0 < lo < hi");
  }
  auto skew = [beta](double g) { return skewness_freq(MorseParams(beta, g)); };
  constexpr int kSamples = 256;
  const double step = std::log(gamma_hi / gamma_lo) / kSamples;
  double prev_g = gamma_lo;
  double prev_s = skew(prev_g);
  for (int i = 1; i <= kSamples; ++i) {
    const double g = gamma_lo * std::exp(step * i);
    const double s = skew(g);
    if (prev_s == 0.0) return prev_g;
    if ((prev_s > 0.0) != (s > 0.0)) {
      boost::uintmax_t iterations = 200;
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          skew, prev_g, g, prev_s, s, boost::math::tools::eps_tolerance<double>(50), iterations);
      return 0.5 * (lo + hi);
    }
    prev_g = g;
    prev_s = s;
  }
  return std::nullopt;
}

double quadrature_moment(const RealFunction& spectrum, int n, MomentWeight weight,
                         const QuadratureOptions& options, Support support) {
  const double scale = options.hints.empty() ? 1.0 : std::abs(options.hints.front());
  auto power = [n](double w) { return n == 0 ? 1.0 : std::pow(w, n); };
  RealFunction integrand;
  if (weight == MomentWeight::energy) {
    integrand = [&spectrum, power](double w) {
      const double v = spectrum(w);
      return v == 0.0 ? 0.0 : power(w) * v * v;
    };
  } else {
    integrand = [&spectrum, power, support, scale](double w) {
      // Half-line spectra may have a kink at 0, so the stencil stays inside (0, inf).
      const double h0 = support == Support::half_line ? 0.25 * std::abs(w)
                                                      : 0.25 * std::max(std::abs(w), 1e-2 * scale);
      if (h0 == 0.0) return 0.0;
      const double d = stable_derivative(spectrum, w, h0);
      return power(w) * d * d;
    };
  }
  const QuadratureResult r = support == Support::half_line
                                 ? integrate_half_line(integrand, options)
                                 : integrate_real_line(integrand, options);
  return r.value;
}

PropertySummary quadrature_properties(const RealFunction& spectrum,
                                      const RealFunction& derivative, Support support,
                                      const QuadratureOptions& options) {
  const double m0 = quadrature_moment(spectrum, 0, MomentWeight::energy, options, support);
  if (!(m0 > 0.0)) throw Error(ErrorKind::argument, "spectrum has zero energy");
  const double m1 = quadrature_moment(spectrum, 1, MomentWeight::energy, options, support) / m0;
  const double m2 = quadrature_moment(spectrum, 2, MomentWeight::energy, options, support) / m0;
  const double m3 = quadrature_moment(spectrum, 3, MomentWeight::energy, options, support) / m0;
  const double d = derivative
                       ? quadrature_moment(derivative, 0, MomentWeight::energy, options, support)
                       : quadrature_moment(spectrum, 0, MomentWeight::derivative_energy, options,
                                           support);
  PropertySummary s;
  s.peak_frequency = std::numeric_limits<double>::quiet_NaN();
  s.duration = std::numeric_limits<double>::quiet_NaN();
  s.mean_frequency = m1;
  const double variance = std::max(0.0, m2 - m1 * m1);
  s.sigma_omega = std::sqrt(variance);
  s.sigma_t = std::sqrt(d / m0);
  s.heisenberg_area = s.sigma_t * s.sigma_omega;
  s.skewness = (m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1) / std::pow(variance, 1.5);
  return s;
}

}  // namespace morsekit
