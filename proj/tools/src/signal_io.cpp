#include "morsekit_cli/signal_io.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <vector>

#include "morsekit/errors.hpp"
#include "morsekit_cli/ranges.hpp"

namespace morsekit::cli {
namespace {

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace

SignalBuffer read_signal(std::istream& in, const std::string& source_name) {
  std::vector<std::complex<double>> samples;
  double dt = 1.0;
  std::size_t columns = 0;
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::parse, source_name + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const std::size_t key = line.find("dt=", first);
      if (key != std::string::npos) {
        try {
          dt = parse_real(line.substr(key + 3));
        } catch (const Error&) {
          fail("bad dt value in '" + line + "'");
        }
        if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be positive and finite");
      }
      continue;
    }
    const std::vector<std::string> f = fields(line);
    if (f.size() > 2) fail("expected 1 or 2 columns, found " + std::to_string(f.size()));
    if (columns == 0) columns = f.size();
    if (f.size() != columns) {
      fail("expected " + std::to_string(columns) + " columns, found " + std::to_string(f.size()));
    }
    double re = 0.0;
    double im = 0.0;
    try {
      re = parse_real(f[0]);
      if (columns == 2) im = parse_real(f[1]);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (!std::isfinite(re) || !std::isfinite(im)) fail("non-finite sample");
    samples.emplace_back(re, im);
  }
  if (samples.size() < 2) {
    throw Error(ErrorKind::parse, source_name + ": need at least 2 samples, found " +
                                      std::to_string(samples.size()));
  }
  if (columns == 2) return SignalBuffer::complex(std::move(samples), dt);
  std::vector<double> real(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) real[i] = samples[i].real();
  return SignalBuffer::real(std::move(real), dt);
}

SignalBuffer read_signal_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::io, "cannot open signal file '" + path + "'");
  return read_signal(file, path);
}

}  // namespace morsekit::cli
