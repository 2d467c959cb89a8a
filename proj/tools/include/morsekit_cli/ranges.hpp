#pragma once

#include <string_view>
#include <vector>

namespace morsekit::cli {

/// Parses "a,b,c" (explicit list) or "lo:hi:n" (n log-spaced values from lo
/// to hi inclusive). Throws Error(parse) on malformed text.
std::vector<double> parse_values(std::string_view text);

/// Parses "start:step:stop" into start, start + step, ... <= stop (inclusive
/// up to a relative slack of 1e-9 steps).
std::vector<double> parse_linear_grid(std::string_view text);

/// Parses a single real; the whole string must be consumed.
double parse_real(std::string_view text);

}  // namespace morsekit::cli
