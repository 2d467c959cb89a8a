#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morsekit/morse.hpp"
#include "morsekit/props.hpp"
#include "morsekit/quadrature.hpp"

namespace morsekit {

// -- Morlet ------------------------------------------------------------------

/// Oscillation frequency nu > 0 of the (zero-mean corrected) Morlet wavelet.
class MorletParams {
 public:
  explicit MorletParams(double nu);
  double nu() const noexcept { return nu_; }
  friend bool operator==(const MorletParams&, const MorletParams&) = default;

 private:
  double nu_;
};

struct MorletPeak {
  double peak_frequency;
  double duration;
};

/// Peak frequency (root of Psi' by bracketed Newton, tolerance 1e-12) and
/// duration P^2 = -omega_p^2 Psi''(omega_p) / Psi(omega_p). Requires nu >= 0.1.
MorletPeak morlet_peak_and_duration(const MorletParams& m);

/// a_nu such that the spectrum peaks at exactly 2.
double morlet_amplitude(const MorletParams& m);

/// a_nu e^{-(omega-nu)^2/2} (1 - e^{-omega nu}). Not analytic: negative for
/// omega < 0.
double morlet_spectrum(const MorletParams& m, double omega);
double morlet_spectrum_derivative(const MorletParams& m, double omega);

/// Inverts nu -> P over nu in [0.1, 50]. Throws Error(domain) when P lies
/// outside the duration range of that interval (P < ~1.432 in particular).
double morlet_nu_for_duration(double duration);

/// Concentration measures by quadrature over the whole frequency axis, with
/// the peak and duration filled in.
PropertySummary morlet_properties(const MorletParams& m, const QuadratureOptions& options = {});

// -- Limiting and related spectra -------------------------------------------

/// 2 U(omega) exp(-P^2 ln^2(omega) / 2): the gamma -> 0 limit at fixed P.
double lognormal_spectrum(double duration, double omega);

/// 2 on 0 < omega <= 1, else 0: the gamma -> infinity limit.
double shannon_spectrum(double omega);

/// Inverse transform of shannon_spectrum, (1/pi) sinc(t/2pi) e^{it/2} with
/// sinc(x) = sin(pi x)/(pi x).
std::complex<double> shannon_time(double t);

/// 2 e^2 exp(-(omega + 1/omega)) for omega > 0, else 0. Peaks at omega = 1.
double bessel_spectrum(double omega);

/// 2 U(omega): 2 for omega > 0, 1 at omega = 0, 0 below.
double analytic_filter_spectrum(double omega);

/// Band-limited realization of the analytic filter (delta(t) + i/(pi t)) on
/// n samples with spacing dt, by inverse DFT of its spectrum.
SampledWaveform analytic_filter_realization(std::size_t n, double dt);

// -- Named wavelets ----------------------------------------------------------

enum class WaveletKind { gmw, morlet, lognormal, shannon, bessel, analytic_filter };

std::string to_string(WaveletKind kind);

struct LognormalParams {
  double duration;
  friend bool operator==(const LognormalParams&, const LognormalParams&) = default;
};

/// A member of the superfamily with a real spectrum. The optional frequency
/// scale c turns spectrum(omega) into base(c omega).
class NamedWavelet {
 public:
  using Params = std::variant<std::monostate, MorseParams, MorletParams, LognormalParams>;

  static NamedWavelet gmw(const MorseParams& p);
  /// Peak-normalized GMW Phi(omega) = Psi(omega_p omega); requires beta > 0.
  static NamedWavelet gmw_rescaled(const MorseParams& p);
  static NamedWavelet morlet(const MorletParams& m);
  static NamedWavelet lognormal(double duration);
  static NamedWavelet shannon();
  static NamedWavelet bessel();
  static NamedWavelet analytic_filter();

  WaveletKind kind() const noexcept { return kind_; }
  const Params& params() const noexcept { return params_; }
  double frequency_scale() const noexcept { return scale_; }

  /// Same wavelet with spectrum omega -> base(c * omega).
  NamedWavelet scaled(double c) const;

  double spectrum(double omega) const;
  RealFunction spectrum_function() const;

  /// True when the spectrum has support on negative frequencies (Morlet).
  bool two_sided() const noexcept { return kind_ == WaveletKind::morlet; }
  bool square_integrable() const noexcept { return kind_ != WaveletKind::analytic_filter; }

  /// Peak frequency and duration where defined (GMW with beta > 0, Morlet,
  /// lognormal, Bessel).
  std::optional<double> peak_frequency() const;
  std::optional<double> duration() const;

  /// Peaks and discontinuities on the positive axis, for quadrature.
  std::vector<double> features() const;

  std::string label() const;

 private:
  NamedWavelet(WaveletKind kind, Params params) : kind_(kind), params_(std::move(params)) {}

  WaveletKind kind_;
  Params params_;
  double scale_ = 1.0;
};

// -- Similarity functionals --------------------------------------------------

/// (int Psi1 Psi2)^2 / (int Psi1^2 int Psi2^2), over (0, inf) or the whole line
/// when either wavelet is two-sided. Equal to the time-domain squared inner
/// product by Parseval. Symmetric in its arguments bit for bit.
double similarity_alpha_sq(const NamedWavelet& w1, const NamedWavelet& w2,
                           const QuadratureOptions& options = {});

/// Squared inner product of the wavelet with its own Gaussian approximant
/// 2 exp(-P^2 (omega/omega_p - 1)^2 / 2).
double gaussianity_rho_sq(const NamedWavelet& w, const QuadratureOptions& options = {});

// -- Limits ------------------------------------------------------------------

enum class LimitTarget { lognormal, shannon };

struct LimitRow {
  double gamma;
  double beta;
  LimitTarget target;  // lognormal for gamma <= 1, Shannon above
  double lognormal_deviation;
  double shannon_deviation;  // excludes |omega - 1| < 0.05

  double deviation() const noexcept {
    return target == LimitTarget::lognormal ? lognormal_deviation : shannon_deviation;
  }
};

/// Sup-norm distance of Phi_{P^2/gamma, gamma} from both limiting forms on
/// omega in [0.05, 4], step 0.002, for each gamma.
std::vector<LimitRow> limit_diagnostics(double duration, const std::vector<double>& gammas);

/// sigma_omega / omega_p, which tends to 0 in the complex-exponential limit
/// beta -> infinity.
double relative_bandwidth(const MorseParams& p);

// -- Bessel fit --------------------------------------------------------------

struct FitOptions {
  double beta_lo = 1.0;
  double beta_hi = 50.0;
  double gamma_lo = 0.02;
  double gamma_hi = 2.0;
  int beta_points = 100;
  int gamma_points = 100;
  /// Pattern search stops once its step in (ln P, ln gamma) is below this.
  double step_tol = 1e-3;
  int threads = 1;
  QuadratureOptions quadrature{};
};

struct FitSample {
  double beta;
  double gamma;
  double alpha_sq;
};

struct FitResult {
  MorseParams best_params;
  double alpha_sq;
  /// Coarse-grid evaluations in row-major order (beta outer, gamma inner).
  std::vector<FitSample> grid_trace;
  int refinement_evaluations;
};

/// Maximizes alpha^2 between the peak-normalized GMW and the Bessel wavelet:
/// log-spaced coarse grid, then a Hooke-Jeeves pattern search (contraction 0.5)
/// in (ln P, ln gamma) kept inside the grid bounds.
FitResult bessel_fit(const FitOptions& options = {});

}  // namespace morsekit
