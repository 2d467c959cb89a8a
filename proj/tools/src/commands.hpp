#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "morsekit_cli/table.hpp"

namespace morsekit::cli {

struct CommonOptions {
  std::string out;
  Format format = Format::csv;
  int threads = 0;
  std::string beta;
  std::string gamma;
  std::string pgrid;
};

struct CwtOptions {
  std::string signal;
  int density = 4;
  double eta = 0.1;
  double p0 = 5.0;
  std::string norm = "n1";
  std::string boundary = "periodic";
};

struct FitCommandOptions {
  double step_tol = 1e-3;
  std::string trace;
};

struct LimitsOptions {
  std::string duration = "3";
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

void cmd_map(const CommonOptions& common, Streams io);
void cmd_gallery(const CommonOptions& common, Streams io);
void cmd_curves(const CommonOptions& common, Streams io);
void cmd_props(const CommonOptions& common, const std::vector<std::string>& pairs, Streams io);
void cmd_cwt(const CommonOptions& common, const CwtOptions& cwt, Streams io);
void cmd_besselfit(const CommonOptions& common, const FitCommandOptions& fit, Streams io);
void cmd_limits(const CommonOptions& common, const LimitsOptions& limits, Streams io);

}  // namespace morsekit::cli
