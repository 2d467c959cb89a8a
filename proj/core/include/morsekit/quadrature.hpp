#pragma once

#include <functional>
#include <vector>

namespace morsekit {

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  /// Octaves whose mass |omega f(omega)| falls below this fraction of the
  /// largest octave mass are dropped from the domain.
  double truncation = 1e-18;
  /// Integrate in u = omega^power. A power that turns the integrand into
  /// something gamma-density-like (e.g. the wavelet's gamma) helps.
  double substitution_power = 1.0;
  int max_subdivisions = 20000;
  /// Known feature locations (peaks) on the positive axis. They seed the
  /// domain scan and become partition breakpoints, so narrow features are
  /// never stepped over.
  std::vector<double> hints;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration over [a, b].
QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const QuadratureOptions& options = {});

/// Integral over (0, inf). The domain is found by an octave scan outward
/// from the hints and truncated where the integrand mass is negligible.
/// Throws Error(quadrature) if the tolerance cannot be met.
QuadratureResult integrate_half_line(const RealFunction& f, const QuadratureOptions& options = {});

/// Integral over the whole real line, as two half-line integrals. Hints are
/// taken as magnitudes and applied to both sides.
QuadratureResult integrate_real_line(const RealFunction& f, const QuadratureOptions& options = {});

/// Ridders' extrapolated central difference, starting from step h0.
/// Optionally reports the extrapolation error estimate.
double ridders_derivative(const RealFunction& f, double x, double h0, double* error = nullptr);

}  // namespace morsekit
