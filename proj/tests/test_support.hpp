#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace testing {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

/// Composite Simpson rule in u = ln(omega): int f(w) dw = int f(e^u) e^u du.
/// Deliberately simple and unrelated to the library's adaptive quadrature.
inline double log_simpson(const std::function<double(double)>& f, double w_lo, double w_hi,
                          int intervals) {
  if (intervals % 2) ++intervals;
  const double a = std::log(w_lo);
  const double h = (std::log(w_hi) - a) / intervals;
  double sum = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double u = a + h * i;
    const double w = std::exp(u);
    const double weight = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += weight * f(w) * w;
  }
  return sum * h / 3.0;
}

/// Seeded generator for property tests. Every test draws from its own seed so
/// failures reproduce in isolation.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
