#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "morsekit/morse.hpp"

namespace morsekit {

/// A uniformly sampled signal. Real input is stored with zero imaginary parts
/// and remembered as real.
class SignalBuffer {
 public:
  /// Throws Error(argument) for fewer than 2 samples, non-finite samples or a
  /// non-positive dt.
  static SignalBuffer real(std::vector<double> samples, double dt = 1.0);
  static SignalBuffer complex(std::vector<std::complex<double>> samples, double dt = 1.0);

  std::span<const std::complex<double>> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double dt() const noexcept { return dt_; }
  bool is_real() const noexcept { return is_real_; }

 private:
  SignalBuffer(std::vector<std::complex<double>> samples, double dt, bool is_real);

  std::vector<std::complex<double>> samples_;
  double dt_;
  bool is_real_;
};

struct ScaleGridOptions {
  int density = 4;     // points per octave
  double eta = 0.1;    // Psi(s_min * pi)/2 at the Nyquist rate
  double p0 = 5.0;     // footprints 2 s P / omega_p that fit in the record
};

/// Strictly increasing scales (in samples) for one wavelet.
struct ScaleGrid {
  std::vector<double> scales;
  MorseParams params;
  double high_cutoff_eta = 0.0;
  double low_cutoff_p0 = 0.0;
  int density = 0;
  /// Signal length the grid was built for; 0 for hand-made grids.
  std::size_t signal_length = 0;

  std::size_t size() const noexcept { return scales.size(); }
};

/// Log-spaced grid from s_min, where Psi(s_min pi)/2 = eta on the high-frequency
/// flank, to s_max = n omega_p / (2 P p0), endpoints included, with
/// round(density * log2(s_max/s_min)) + 1 points. Throws Error(argument) when
/// s_min > s_max.
ScaleGrid scale_grid(std::size_t signal_length, const MorseParams& p,
                     const ScaleGridOptions& options = {});

/// Wraps explicit scales, which must be positive and strictly increasing.
ScaleGrid custom_scale_grid(const MorseParams& p, std::vector<double> scales);

enum class Normalization { bandpass_n1, unitary_n_half };
enum class Boundary { periodic, zero, mirror };

struct TransformOptions {
  Normalization normalization = Normalization::bandpass_n1;
  Boundary boundary = Boundary::periodic;
  int threads = 1;
  /// Lower bound on the padded length for zero/mirror boundaries; the
  /// default pads to the next power of two >= 2n.
  std::size_t min_padded_length = 0;
};

/// Coefficients stored time-major: coefficients[t * n_scales + j].
struct CwtResult {
  std::vector<std::complex<double>> coefficients;
  std::size_t n_times = 0;
  std::size_t n_scales = 0;
  ScaleGrid grid;
  Normalization normalization = Normalization::bandpass_n1;
  Boundary boundary = Boundary::periodic;
  double dt = 1.0;

  std::complex<double> at(std::size_t t, std::size_t j) const {
    return coefficients[t * n_scales + j];
  }
  /// Coefficients of scale j over time.
  std::vector<std::complex<double>> column(std::size_t j) const;
  /// Physical peak frequency omega_p / (s dt) of scale j, in radians per unit time.
  double frequency(std::size_t j) const;
};

/// W(t, s) = IDFT[X_k Psi(s omega_k)] with omega_k = 2 pi k / M radians per
/// sample (negative above M/2, +pi at the Nyquist bin), times sqrt(s) for the
/// unitary normalization. Zero and mirror boundaries center the signal in a
/// padded buffer and crop afterwards. Throws Error(argument) on a grid built
/// for a different length.
CwtResult transform(const SignalBuffer& x, const ScaleGrid& grid,
                    const TransformOptions& options = {});

/// Analytic signal: DC kept, bins 1..n/2 doubled (Nyquist included, matching
/// the +pi convention above), the rest zeroed.
SignalBuffer analytic_signal(const SignalBuffer& x);

struct RidgeEstimate {
  std::size_t index;
  double scale;
  double mean_modulus;
  /// |s omega0 / omega_p - 1|, to be compared with the grid's ratio step.
  double mismatch;
  /// Ratio s_{j+1}/s_j - 1 around the ridge.
  double grid_step;
};

/// Locates the scale of maximum mean modulus over the central half of the
/// record for a pure tone of frequency omega0 (radians per sample). Throws
/// Error(domain) when the maximum sits on the first or last scale, and
/// Error(argument) when the ridge modulus varies by more than 5% over time.
RidgeEstimate ridge_frequency_check(const CwtResult& result, double omega0);

}  // namespace morsekit
