#pragma once

#include <istream>
#include <string>

#include "morsekit/cwt.hpp"

namespace morsekit::cli {

/// Reads a plain-text signal: one real per line, or two columns (real and
/// imaginary parts, separated by whitespace or a comma). Blank lines and '#'
/// comments are skipped; a "# dt=<value>" comment sets the sample spacing
/// (default 1). Errors carry the 1-based line number.
SignalBuffer read_signal(std::istream& in, const std::string& source_name = "<input>");
SignalBuffer read_signal_file(const std::string& path);

}  // namespace morsekit::cli
