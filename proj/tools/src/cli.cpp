#include "morsekit_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "commands.hpp"
#include "morsekit/errors.hpp"
#include "morsekit_cli/ranges.hpp"

namespace morsekit::cli {
namespace {

int default_threads() {
  const char* env = std::getenv("MORSEKIT_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const double value = parse_real(env);
  if (value < 0 || value != static_cast<int>(value)) {
    throw Error(ErrorKind::argument, "MORSEKIT_THREADS must be a non-negative integer");
  }
  return static_cast<int>(value);
}

void add_common(CLI::App* cmd, CommonOptions& common, std::string& format, bool ranges,
                bool pgrid) {
  cmd->add_option("--out", common.out, "Output file (or directory for map/gallery)");
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", common.threads, "Worker threads, 0 = one per core")
      ->check(CLI::NonNegativeNumber);
  if (ranges) {
    cmd->add_option("--beta", common.beta, "beta values: a,b,c or lo:hi:n (log-spaced)");
    cmd->add_option("--gamma", common.gamma, "gamma values: a,b,c or lo:hi:n (log-spaced)");
  }
  if (pgrid) cmd->add_option("--pgrid", common.pgrid, "Duration grid start:step:stop");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Morse wavelets: properties, figure data and transforms", "morsekit"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string format = "csv";
  CwtOptions cwt;
  FitCommandOptions fit;
  LimitsOptions limits;
  std::vector<std::string> pairs;

  auto* map = app.add_subcommand("map", "Heisenberg area grid, zero-skewness curve and guide lines");
  add_common(map, common, format, true, false);
  auto* gallery = app.add_subcommand("gallery", "Time and frequency samples for (beta, gamma) pairs");
  add_common(gallery, common, format, true, false);
  auto* curves = app.add_subcommand("curves", "1/A and Gaussianity versus duration, gamma = 1..6 and Morlet");
  add_common(curves, common, format, false, true);
  auto* props = app.add_subcommand("props", "Property table for beta,gamma pairs");
  add_common(props, common, format, true, false);
  props->add_option("pairs", pairs, "beta,gamma pairs");
  auto* cwt_cmd = app.add_subcommand("cwt", "Continuous wavelet transform of a signal file");
  add_common(cwt_cmd, common, format, true, false);
  cwt_cmd->add_option("--signal", cwt.signal, "Signal file")->required();
  cwt_cmd->add_option("--density", cwt.density, "Scales per octave")->check(CLI::PositiveNumber);
  cwt_cmd->add_option("--eta", cwt.eta, "Nyquist cutoff Psi(s pi)/2 at the smallest scale");
  cwt_cmd->add_option("--p0", cwt.p0, "Wavelet footprints that fit in the record");
  cwt_cmd->add_option("--norm", cwt.norm, "Normalization")->check(CLI::IsMember({"n1", "nhalf"}));
  cwt_cmd->add_option("--boundary", cwt.boundary, "Boundary handling")
      ->check(CLI::IsMember({"periodic", "zero", "mirror"}));
  auto* besselfit = app.add_subcommand("besselfit", "Best generalized Morse match to the Bessel wavelet");
  add_common(besselfit, common, format, true, false);
  besselfit->add_option("--step-tol", fit.step_tol, "Pattern search stopping step");
  besselfit->add_option("--trace", fit.trace, "Write the coarse-grid trace to this file");
  auto* limit_cmd = app.add_subcommand("limits", "Distance to the lognormal and Shannon limits");
  add_common(limit_cmd, common, format, true, false);
  limit_cmd->add_option("--duration", limits.duration, "Durations P: a,b,c or lo:hi:n");

  try {
    common.threads = default_threads();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: argument: " << message << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  }
  common.format = format == "json" ? Format::json : Format::csv;

  const Streams io{out, err};
  try {
    if (map->parsed()) cmd_map(common, io);
    if (gallery->parsed()) cmd_gallery(common, io);
    if (curves->parsed()) cmd_curves(common, io);
    if (props->parsed()) cmd_props(common, pairs, io);
    if (cwt_cmd->parsed()) cmd_cwt(common, cwt, io);
    if (besselfit->parsed()) cmd_besselfit(common, fit, io);
    if (limit_cmd->parsed()) cmd_limits(common, limits, io);
  } catch (const Error& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << to_string(e.kind()) << ": " << message << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace morsekit::cli
