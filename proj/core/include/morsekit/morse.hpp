#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace morsekit {

/// The (beta, gamma) pair indexing the generalized Morse wavelet family.
///
/// beta controls the low-frequency behaviour (and the long-time decay
/// ~ 1/t^(beta+1)), gamma the high-frequency decay. Construction validates
/// gamma > 0 and beta >= 0; both must be finite.
class MorseParams {
 public:
  MorseParams(double beta, double gamma);

  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  /// gamma >= 1 and beta > (gamma - 1)/2: the region where these wavelets
  /// are eigenfunctions of the time/frequency localization operator.
  /// Informational only; nothing in the library enforces it.
  bool in_localization_region() const noexcept;

  friend bool operator==(const MorseParams&, const MorseParams&) = default;

 private:
  double beta_;
  double gamma_;
};

/// Peak (modal) radian frequency (beta/gamma)^(1/gamma), evaluated in log space.
/// Throws Error(domain) for beta = 0, which has no interior maximum.
double peak_frequency(const MorseParams& p);

/// Natural log of peak_frequency; finite wherever peak_frequency is defined,
/// including parameter pairs whose peak overflows a double.
double log_peak_frequency(const MorseParams& p);

/// Frequency at which the spectrum falls to half its maximum, (ln 2)^(1/gamma)
/// for beta = 0. Gives beta = 0 members a characteristic frequency.
double half_power_frequency(const MorseParams& p);

/// Duration P = sqrt(beta * gamma).
double duration(const MorseParams& p);

/// Amplitude a such that the spectrum peaks at exactly 2. Returns +inf when
/// a itself overflows; spectrum evaluation never forms a directly.
double amplitude_constant(const MorseParams& p);
double log_amplitude_constant(const MorseParams& p);

/// Psi(omega) = U(omega) a omega^beta exp(-omega^gamma). Zero for omega <= 0.
double eval_spectrum(const MorseParams& p, double omega);

/// Phi(omega) = Psi(omega_p * omega): the peak-normalized spectrum with its
/// maximum value 2 at omega = 1. Requires beta > 0.
double eval_rescaled_spectrum(const MorseParams& p, double omega);

/// ln(Psi(omega_p (1 + x)) / 2), evaluated directly from the offset x without
/// forming omega. Useful wherever derivatives in x are taken numerically.
/// Requires beta > 0 and x > -1.
double log_peak_ratio(const MorseParams& p, double x);

/// d^n/domega^n ln Psi at omega_p for n = 1..n_max (1 <= n_max <= 10).
/// Element 0 holds the first derivative, which is exactly zero.
std::vector<double> log_spectrum_derivatives(const MorseParams& p, int n_max);

/// Coefficients of the log-spectrum expansion about the peak in
/// x = omega/omega_p - 1:
///   ln(Psi/2) = -duration_sq x^2 / 2 + cubic x^3 + quartic x^4 + O(x^5).
struct ExpansionCoeffs {
  double duration_sq;
  double cubic;
  double quartic;
};

ExpansionCoeffs expansion_coeffs(const MorseParams& p);

enum class ApproxOrder { gaussian = 2, quartic = 4 };

/// Gaussian (order 2) or quartic (order 4) approximant of Psi about its peak.
double approx_spectrum(const MorseParams& p, double omega, ApproxOrder order);

// -- Sampled representations -------------------------------------------------

/// Spectrum samples on an explicit, strictly increasing frequency grid.
struct SampledSpectrum {
  std::vector<double> frequencies;
  std::vector<std::complex<double>> values;
};

/// Time-domain samples on a uniform grid. times[center_index()] == 0.
struct SampledWaveform {
  std::vector<double> times;
  std::vector<std::complex<double>> values;
  double dt = 1.0;

  std::size_t center_index() const noexcept { return values.size() / 2; }
};

/// Radian frequency of DFT bin k for an n-point transform with spacing dt.
/// Bins above n/2 map to negative frequencies; the Nyquist bin (k = n/2, n
/// even) maps to +pi/dt.
double dft_bin_frequency(std::size_t k, std::size_t n, double dt) noexcept;

struct SampleOptions {
  /// Reject when Psi(s * omega_nyquist)/2 exceeds this value.
  double aliasing_threshold = 0.1;
};

/// psi at scale s on n uniform samples centered at t = 0, with 1/s
/// normalization (its transform is Psi(s omega)). Built by inverse DFT of
/// the spectrum sampled on the DFT grid and rotated so the wavelet center
/// lands on sample n/2.
SampledWaveform sample_wavelet(const MorseParams& p, double scale, std::size_t n, double dt,
                               const SampleOptions& options = {});

/// Inverse-DFT realization of an arbitrary real spectrum: samples
/// spectrum(omega_k) on the DFT grid and returns the centered waveform with the
/// same conventions as sample_wavelet. No aliasing check is made.
SampledWaveform sample_from_spectrum(const std::function<double(double)>& spectrum,
                                     std::size_t n, double dt);

/// The DFT-grid samples Psi(s * omega_k), k = 0..n-1 (bin order, unrotated),
/// that sample_wavelet transforms.
std::vector<double> sample_spectrum_on_dft_grid(const MorseParams& p, double scale,
                                                std::size_t n, double dt);

}  // namespace morsekit
