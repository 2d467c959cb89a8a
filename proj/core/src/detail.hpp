#pragma once

#include <cmath>

#include "morsekit/parallel.hpp"

namespace morsekit::detail {

/// exp(y) - 1 - y without cancellation near y = 0.
inline double expm1_minus_linear(double y) {
  if (std::abs(y) >= 0.5) return std::expm1(y) - y;
  double term = 0.5 * y * y;
  double sum = term;
  for (int k = 3; k < 40; ++k) {
    term *= y / k;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace morsekit::detail
