#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>

#include "morsekit/cwt.hpp"
#include "morsekit/errors.hpp"
#include "morsekit/fft.hpp"
#include "morsekit/parallel.hpp"
#include "morsekit/props.hpp"
#include "morsekit/superfamily.hpp"
#include "morsekit_cli/ranges.hpp"
#include "morsekit_cli/signal_io.hpp"

namespace morsekit::cli {
namespace {

const char* extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

std::vector<double> values_or(const std::string& text, std::vector<double> fallback) {
  return text.empty() ? fallback : parse_values(text);
}

std::vector<double> log_range(double lo, double hi, int n) {
  return parse_values(format_double(lo) + ":" + format_double(hi) + ":" + std::to_string(n));
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_double(values[i]);
  return s;
}

void emit(const CommonOptions& common, const RunRecord& run, const Table& table, Streams io) {
  if (common.out.empty()) {
    write_table(io.out, run, table, common.format);
  } else {
    write_table_file(common.out, run, table, common.format);
  }
}

std::string require_directory(const CommonOptions& common, const char* command) {
  if (common.out.empty()) {
    throw Error(ErrorKind::argument, std::string(command) + " writes several files: pass --out <directory>");
  }
  std::error_code ec;
  std::filesystem::create_directories(common.out, ec);
  if (ec || !std::filesystem::is_directory(common.out)) {
    throw Error(ErrorKind::io, "cannot create output directory '" + common.out + "'");
  }
  return common.out;
}

std::string in_dir(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

// -- map ----------------------------------------------------------------------

void cmd_map(const CommonOptions& common, Streams io) {
  const std::string dir = require_directory(common, "map");
  const std::vector<double> betas = values_or(common.beta, log_range(0.55, 60.0, 200));
  const std::vector<double> gammas = values_or(common.gamma, log_range(0.3, 30.0, 200));
  const std::string ext = extension(common.format);

  RunRecord run{"map", {}};
  run.add("beta", common.beta.empty() ? "0.55:60:200" : common.beta);
  run.add("gamma", common.gamma.empty() ? "0.3:30:200" : common.gamma);

  const std::size_t ng = gammas.size();
  std::vector<double> area(betas.size() * ng);
  parallel_for(area.size(), common.threads, [&](std::size_t k) {
    area[k] = heisenberg_area(MorseParams(betas[k / ng], gammas[k % ng]));
  });
  Table area_table{{"beta", "gamma", "area"}, {}, {}};
  for (std::size_t k = 0; k < area.size(); ++k) {
    area_table.rows.push_back({betas[k / ng], gammas[k % ng], area[k]});
  }
  write_table_file(in_dir(dir, "area" + ext), run, area_table, common.format);

  const double g_lo = *std::min_element(gammas.begin(), gammas.end());
  const double g_hi = *std::max_element(gammas.begin(), gammas.end());
  std::vector<std::optional<double>> zero(betas.size());
  if (g_hi > g_lo) {
    parallel_for(betas.size(), common.threads,
                 [&](std::size_t i) { zero[i] = zero_skewness_gamma(betas[i], g_lo, g_hi); });
  }
  Table skew_table{{"beta", "gamma_zero_skewness"}, {}, {}};
  for (std::size_t i = 0; i < betas.size(); ++i) {
    skew_table.rows.push_back({betas[i], zero[i] ? Cell{*zero[i]} : Cell{}});
  }
  write_table_file(in_dir(dir, "skewness_zero" + ext), run, skew_table, common.format);

  Table border{{"gamma", "beta"}, {}, {}};
  for (double g : gammas) {
    if (g >= 1.0) border.rows.push_back({g, (g - 1.0) / 2.0});
  }
  write_table_file(in_dir(dir, "localization_border" + ext), run, border, common.format);

  Table lines{{"duration", "gamma", "beta"}, {}, {}};
  for (double p : {1.0 / 3.0, 1.0, 3.0, 9.0, 27.0}) {
    for (double g : gammas) lines.rows.push_back({p, g, p * p / g});
  }
  write_table_file(in_dir(dir, "duration_lines" + ext), run, lines, common.format);

  for (const char* name : {"area", "skewness_zero", "localization_border", "duration_lines"}) {
    io.out << in_dir(dir, name + ext) << '\n';
  }
}

// -- gallery ------------------------------------------------------------------

namespace {

constexpr double kGalleryHalfWidth = 8.0;  // in units of P / omega_p

// Time samples on |t omega_p / P| <= kGalleryHalfWidth, at most ~1000 rows.
void gallery_time_rows(const MorseParams& p, Table& table) {
  const double wp = peak_frequency(p);
  const double unit = duration(p) / wp;
  // Resolve the spectrum down to 1e-6 of its peak on the high side.
  double lo = 0.0;
  double hi = 1.0;
  const double target = std::log(1e-6);
  while (log_peak_ratio(p, hi) > target) hi *= 2.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_peak_ratio(p, mid) > target ? lo : hi) = mid;
  }
  const double w_max = wp * (1.0 + hi);
  const double window = 4.0 * kGalleryHalfWidth * unit;
  double dt = std::numbers::pi / w_max;
  constexpr std::size_t kMaxSamples = std::size_t{1} << 20;
  std::size_t n = next_power_of_two(static_cast<std::size_t>(std::ceil(window / dt)));
  n = std::max<std::size_t>(n, 1024);
  if (n > kMaxSamples) {
    n = kMaxSamples;
    dt = window / static_cast<double>(n);
  }
  const SampledWaveform w = sample_wavelet(p, 1.0, n, dt, SampleOptions{.aliasing_threshold = 1.0});

  const std::size_t center = w.center_index();
  const auto reach = static_cast<std::size_t>(std::floor(kGalleryHalfWidth * unit / dt));
  const std::size_t stride = std::max<std::size_t>(1, (reach + 499) / 500);
  const std::size_t steps = std::min(reach / stride, (center - 1) / stride);
  for (std::size_t k = 0; k <= 2 * steps; ++k) {
    const std::size_t j = center - steps * stride + k * stride;
    const std::complex<double> v = w.values[j];
    table.rows.push_back({std::string("time"), w.times[j] / unit, v.real(), v.imag(), std::abs(v),
                          Cell{}, Cell{}, Cell{}});
  }
}

void gallery_frequency_rows(const MorseParams& p, Table& table) {
  const double wp = peak_frequency(p);
  for (int k = 1; k <= 800; ++k) {
    const double x = k / 200.0;
    table.rows.push_back({std::string("frequency"), x, Cell{}, Cell{}, Cell{},
                          eval_rescaled_spectrum(p, x),
                          approx_spectrum(p, x * wp, ApproxOrder::gaussian),
                          approx_spectrum(p, x * wp, ApproxOrder::quartic)});
  }
}

}  // namespace

void cmd_gallery(const CommonOptions& common, Streams io) {
  const std::string dir = require_directory(common, "gallery");
  const std::vector<double> powers{1.0 / 3.0, 1.0, 3.0, 9.0, 27.0};
  const std::vector<double> betas = values_or(common.beta, powers);
  const std::vector<double> gammas = values_or(common.gamma, powers);
  const std::string ext = extension(common.format);

  const std::size_t ng = gammas.size();
  std::vector<Table> tables(betas.size() * ng);
  parallel_for(tables.size(), common.threads, [&](std::size_t k) {
    const MorseParams p(betas[k / ng], gammas[k % ng]);
    Table& t = tables[k];
    t.columns = {"domain", "x", "real", "imag", "modulus", "wavelet", "gaussian", "quartic"};
    t.notes = {{"time x", "t * omega_p / P"}, {"frequency x", "omega / omega_p"}};
    gallery_time_rows(p, t);
    gallery_frequency_rows(p, t);
  });

  RunRecord index_run{"gallery", {}};
  index_run.add("beta", common.beta.empty() ? join(powers) : common.beta);
  index_run.add("gamma", common.gamma.empty() ? join(powers) : common.gamma);
  Table index{{"beta", "gamma", "peak_frequency", "duration", "file"}, {}, {}};
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const MorseParams p(betas[k / ng], gammas[k % ng]);
    const std::string name =
        "gmw_" + std::to_string(k / ng) + "_" + std::to_string(k % ng) + ext;
    RunRecord run{"gallery", {}};
    run.add("beta", format_double(p.beta()));
    run.add("gamma", format_double(p.gamma()));
    write_table_file(in_dir(dir, name), run, tables[k], common.format);
    index.rows.push_back({p.beta(), p.gamma(), peak_frequency(p), duration(p), name});
  }
  write_table_file(in_dir(dir, "index" + ext), index_run, index, common.format);
  io.out << in_dir(dir, "index" + ext) << '\n';
}

// -- curves -------------------------------------------------------------------

void cmd_curves(const CommonOptions& common, Streams io) {
  const std::string pgrid = common.pgrid.empty() ? "0.5:0.05:8" : common.pgrid;
  const std::vector<double> durations = parse_linear_grid(pgrid);
  for (double p : durations) {
    if (!(p > 0.0)) throw Error(ErrorKind::argument, "curves: durations must be positive");
  }
  constexpr int kGammas = 6;

  Table table;
  table.columns.push_back("duration");
  for (int g = 1; g <= kGammas; ++g) table.columns.push_back("inv_area_gamma" + std::to_string(g));
  for (int g = 1; g <= kGammas; ++g) table.columns.push_back("rho_sq_gamma" + std::to_string(g));
  table.columns.insert(table.columns.end(), {"morlet_nu", "inv_area_morlet", "rho_sq_morlet"});

  std::vector<std::vector<Cell>> rows(durations.size());
  std::vector<char> morlet_missing(durations.size(), 0);
  parallel_for(durations.size(), common.threads, [&](std::size_t i) {
    const double dur = durations[i];
    std::vector<Cell>& row = rows[i];
    row.reserve(table.columns.size());
    row.emplace_back(dur);
    std::vector<Cell> rho;
    for (int g = 1; g <= kGammas; ++g) {
      const MorseParams p(dur * dur / g, g);
      // The area diverges for beta <= 1/2; those cells stay blank.
      row.push_back(p.beta() <= 0.5 ? Cell{} : Cell{1.0 / heisenberg_area(p)});
      rho.emplace_back(gaussianity_rho_sq(NamedWavelet::gmw(p)));
    }
    row.insert(row.end(), rho.begin(), rho.end());
    try {
      const MorletParams m(morlet_nu_for_duration(dur));
      const PropertySummary s = morlet_properties(m);
      row.insert(row.end(), {m.nu(), 1.0 / s.heisenberg_area,
                             gaussianity_rho_sq(NamedWavelet::morlet(m))});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::domain) throw;
      morlet_missing[i] = 1;
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
    }
  });
  table.rows = std::move(rows);

  const auto missing = std::count(morlet_missing.begin(), morlet_missing.end(), 1);
  if (missing > 0) {
    io.err << "warning: morlet columns blank for " << missing
           << " durations outside the range reachable with nu in [0.1, 50]\n";
  }
  RunRecord run{"curves", {}};
  run.add("pgrid", pgrid);
  emit(common, run, table, io);
}

// -- props --------------------------------------------------------------------

void cmd_props(const CommonOptions& common, const std::vector<std::string>& pairs, Streams io) {
  std::vector<MorseParams> params;
  for (const std::string& pair : pairs) {
    const std::vector<double> v = parse_values(pair);
    if (v.size() != 2 || pair.find(':') != std::string::npos) {
      throw Error(ErrorKind::parse, "expected beta,gamma pair, got '" + pair + "'");
    }
    params.emplace_back(v[0], v[1]);
  }
  if (!common.beta.empty() || !common.gamma.empty()) {
    if (common.beta.empty() || common.gamma.empty()) {
      throw Error(ErrorKind::argument, "props: --beta and --gamma must be given together");
    }
    for (double b : parse_values(common.beta)) {
      for (double g : parse_values(common.gamma)) params.emplace_back(b, g);
    }
  }
  if (params.empty()) throw Error(ErrorKind::argument, "props: give beta,gamma pairs or --beta/--gamma");

  Table table{{"beta", "gamma", "peak_frequency", "duration", "mean_frequency", "sigma_t",
               "sigma_omega", "heisenberg_area", "skewness"},
              {},
              {}};
  for (const MorseParams& p : params) {
    const PropertySummary s = property_summary(p);
    table.rows.push_back({p.beta(), p.gamma(), s.peak_frequency, s.duration, s.mean_frequency,
                          s.sigma_t, s.sigma_omega, s.heisenberg_area, s.skewness});
  }
  RunRecord run{"props", {}};
  std::string listed;
  for (const MorseParams& p : params) {
    listed += (listed.empty() ? "" : ";") + format_double(p.beta()) + "," + format_double(p.gamma());
  }
  run.add("pairs", listed);
  emit(common, run, table, io);
}

// -- cwt ----------------------------------------------------------------------

void cmd_cwt(const CommonOptions& common, const CwtOptions& cwt, Streams io) {
  const std::vector<double> beta = values_or(common.beta, {9.0});
  const std::vector<double> gamma = values_or(common.gamma, {3.0});
  if (beta.size() != 1 || gamma.size() != 1) {
    throw Error(ErrorKind::argument, "cwt takes a single --beta and --gamma");
  }
  const MorseParams p(beta[0], gamma[0]);
  const SignalBuffer x = read_signal_file(cwt.signal);
  const ScaleGrid grid = scale_grid(x.size(), p, {cwt.density, cwt.eta, cwt.p0});
  TransformOptions options;
  options.normalization =
      cwt.norm == "nhalf" ? Normalization::unitary_n_half : Normalization::bandpass_n1;
  options.boundary = cwt.boundary == "zero"     ? Boundary::zero
                     : cwt.boundary == "mirror" ? Boundary::mirror
                                                : Boundary::periodic;
  options.threads = common.threads;
  const CwtResult result = transform(x, grid, options);

  Table table;
  table.columns.push_back("time");
  for (std::size_t j = 0; j < result.n_scales; ++j) {
    table.columns.push_back("re_" + std::to_string(j));
    table.columns.push_back("im_" + std::to_string(j));
  }
  std::vector<double> frequencies(result.n_scales);
  for (std::size_t j = 0; j < result.n_scales; ++j) frequencies[j] = result.frequency(j);
  table.notes = {{"scales", join(grid.scales)}, {"frequencies", join(frequencies)}};
  table.rows.reserve(result.n_times);
  for (std::size_t t = 0; t < result.n_times; ++t) {
    std::vector<Cell> row;
    row.reserve(table.columns.size());
    row.emplace_back(static_cast<double>(t) * x.dt());
    for (std::size_t j = 0; j < result.n_scales; ++j) {
      row.emplace_back(result.at(t, j).real());
      row.emplace_back(result.at(t, j).imag());
    }
    table.rows.push_back(std::move(row));
  }

  RunRecord run{"cwt", {}};
  run.add("signal", cwt.signal);
  run.add("beta", format_double(p.beta()));
  run.add("gamma", format_double(p.gamma()));
  run.add("density", std::to_string(cwt.density));
  run.add("eta", format_double(cwt.eta));
  run.add("p0", format_double(cwt.p0));
  run.add("norm", cwt.norm);
  run.add("boundary", cwt.boundary);
  run.add("dt", format_double(x.dt()));
  emit(common, run, table, io);
}

// -- besselfit ----------------------------------------------------------------

void cmd_besselfit(const CommonOptions& common, const FitCommandOptions& fit, Streams io) {
  FitOptions options;
  auto apply_range = [](const std::string& text, double& lo, double& hi, int& n) {
    if (text.empty()) return;
    if (text.find(':') == std::string::npos) {
      throw Error(ErrorKind::parse, "besselfit ranges must be lo:hi:n, got '" + text + "'");
    }
    const std::vector<double> v = parse_values(text);
    lo = v.front();
    hi = v.back();
    n = static_cast<int>(v.size());
  };
  apply_range(common.beta, options.beta_lo, options.beta_hi, options.beta_points);
  apply_range(common.gamma, options.gamma_lo, options.gamma_hi, options.gamma_points);
  options.step_tol = fit.step_tol;
  options.threads = common.threads;
  const FitResult result = bessel_fit(options);

  RunRecord run{"besselfit", {}};
  run.add("beta", format_double(options.beta_lo) + ":" + format_double(options.beta_hi) + ":" +
                      std::to_string(options.beta_points));
  run.add("gamma", format_double(options.gamma_lo) + ":" + format_double(options.gamma_hi) + ":" +
                       std::to_string(options.gamma_points));
  run.add("step_tol", format_double(options.step_tol));

  if (!fit.trace.empty()) {
    Table trace{{"beta", "gamma", "alpha_sq"}, {}, {}};
    for (const FitSample& s : result.grid_trace) trace.rows.push_back({s.beta, s.gamma, s.alpha_sq});
    write_table_file(fit.trace, run, trace, common.format);
  }
  Table table{{"beta", "gamma", "alpha_sq", "grid_points", "refinement_evaluations"}, {}, {}};
  table.rows.push_back({result.best_params.beta(), result.best_params.gamma(), result.alpha_sq,
                        static_cast<long long>(result.grid_trace.size()),
                        static_cast<long long>(result.refinement_evaluations)});
  emit(common, run, table, io);
}

// -- limits -------------------------------------------------------------------

void cmd_limits(const CommonOptions& common, const LimitsOptions& limits, Streams io) {
  const std::vector<double> durations = parse_values(limits.duration);
  const std::vector<double> gammas =
      values_or(common.gamma, {1.0, 0.5, 0.1, 0.01, 10.0, 100.0, 1000.0});
  Table table{{"duration", "gamma", "beta", "target", "lognormal_deviation", "shannon_deviation"},
              {},
              {}};
  for (double dur : durations) {
    for (const LimitRow& r : limit_diagnostics(dur, gammas)) {
      table.rows.push_back({dur, r.gamma, r.beta,
                            std::string(r.target == LimitTarget::lognormal ? "lognormal" : "shannon"),
                            r.lognormal_deviation, r.shannon_deviation});
    }
  }
  RunRecord run{"limits", {}};
  run.add("duration", limits.duration);
  run.add("gamma", common.gamma.empty() ? join(gammas) : common.gamma);
  emit(common, run, table, io);
}

}  // namespace morsekit::cli
