#include "morsekit_cli/ranges.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "morsekit/errors.hpp"

namespace morsekit::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (t.empty() || res.ec != std::errc() || res.ptr != last) {
    throw Error(ErrorKind::parse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_values(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw Error(ErrorKind::parse, "range must be lo:hi:n, got '" + std::string(text) + "'");
    }
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const double count = parse_real(parts[2]);
    if (!(lo > 0.0) || !(hi >= lo) || count < 1 || count != std::floor(count)) {
      throw Error(ErrorKind::parse, "log range needs 0 < lo <= hi and an integer count >= 1: '" +
                                        std::string(text) + "'");
    }
    const auto n = static_cast<int>(count);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          n == 1 ? lo : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    }
    if (n > 1) out.back() = hi;
    return out;
  }
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<double> parse_linear_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw Error(ErrorKind::parse, "grid must be start:step:stop, got '" + std::string(text) + "'");
  }
  const double start = parse_real(parts[0]);
  const double step = parse_real(parts[1]);
  const double stop = parse_real(parts[2]);
  if (!(step > 0.0) || !(stop >= start)) {
    throw Error(ErrorKind::parse, "grid needs step > 0 and stop >= start: '" + std::string(text) + "'");
  }
  const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw Error(ErrorKind::parse, "grid has too many points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = start + step * static_cast<double>(k);
  return out;
}

}  // namespace morsekit::cli
