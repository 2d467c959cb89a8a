#pragma once

#include <map>
#include <optional>
#include <span>

#include "morsekit/morse.hpp"
#include "morsekit/quadrature.hpp"

namespace morsekit {

/// Time/frequency concentration summary of one wavelet. sigma_t and
/// heisenberg_area are +inf where the time spread diverges (beta <= 1/2 for
/// generalized Morse wavelets).
struct PropertySummary {
  double peak_frequency = 0.0;
  double duration = 0.0;
  double mean_frequency = 0.0;
  double sigma_t = 0.0;
  double sigma_omega = 0.0;
  double heisenberg_area = 0.0;
  double skewness = 0.0;
};

/// Energy moments m_n = int_0^inf omega^n |Psi(omega)|^2 d omega for a set of orders.
struct MomentTable {
  MorseParams params;
  std::map<int, double> moments;
};

/// Closed form a^2 Gamma((2 beta + n + 1)/gamma) / (gamma 2^((2 beta + n + 1)/gamma)).
/// Throws Error(domain) when 2 beta + n + 1 <= 0 or n < -2.
double energy_moment(const MorseParams& p, int n);
double log_energy_moment(const MorseParams& p, int n);

MomentTable moment_table(const MorseParams& p, std::span<const int> orders);

/// Energy-weighted mean frequency m_1/m_0.
double mean_frequency(const MorseParams& p);

double sigma_omega(const MorseParams& p);

/// Time-domain standard deviation, +inf for beta <= 1/2.
///
/// Uses int t^2 |psi|^2 dt = (1/2pi) int |Psi'|^2 d omega with a zero time
/// mean (the spectrum is real, so |psi(t)| is even). The derivative energy
/// expands into three generalized-gamma integrals.
double sigma_t(const MorseParams& p);

double heisenberg_area(const MorseParams& p);

/// Standardized third central moment of the energy density |Psi|^2 / m_0.
double skewness_freq(const MorseParams& p);

/// Full summary; requires beta > 0.
PropertySummary property_summary(const MorseParams& p);

/// Gamma at which the frequency-domain skewness changes sign for this beta,
/// searched on [gamma_lo, gamma_hi]. Empty when no sign change is bracketed.
std::optional<double> zero_skewness_gamma(double beta, double gamma_lo = 0.3,
                                          double gamma_hi = 30.0);

// -- Quadrature path ---------------------------------------------------------

enum class MomentWeight { energy, derivative_energy };
enum class Support { half_line, real_line };

/// int omega^n |spectrum|^2 (energy) or int omega^n |spectrum'|^2
/// (derivative_energy, derivative by Ridders extrapolation) over (0, inf) or
/// the whole line.
double quadrature_moment(const RealFunction& spectrum, int n, MomentWeight weight,
                         const QuadratureOptions& options = {},
                         Support support = Support::half_line);

/// Concentration measures from a spectrum by quadrature alone. Used for
/// wavelets without closed forms (Morlet, Bessel) and as the oracle for the
/// closed forms. Pass the analytic derivative when available; otherwise it
/// is taken numerically. The spectrum must be real.
PropertySummary quadrature_properties(const RealFunction& spectrum,
                                      const RealFunction& derivative, Support support,
                                      const QuadratureOptions& options = {});

}  // namespace morsekit
