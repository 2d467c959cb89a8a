#include "morsekit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "morsekit/errors.hpp"

namespace morsekit {
namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const RealFunction& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double result_abs = std::abs(result_kronrod);
  std::array<double, 7> fv1{}, fv2{};

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    result_gauss += kWg[j] * (f1 + f2);
    result_kronrod += kWgk[jtw] * (f1 + f2);
    result_abs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    result_kronrod += kWgk[jtwm1] * (f1 + f2);
    result_abs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  const double value = result_kronrod * half;
  result_abs *= std::abs(half);
  result_asc *= std::abs(half);
  double error = std::abs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && error != 0.0) {
    error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
  }
  if (result_abs > tiny / (50.0 * eps)) error = std::max(50.0 * eps * result_abs, error);
  return Segment{a, b, value, error};
}

bool splittable(const Segment& s) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(std::abs(s.a), std::abs(s.b));
  return (s.b - s.a) > 256.0 * eps * scale && (s.b - s.a) > 1e3 * std::numeric_limits<double>::min();
}

QuadratureResult adaptive(const RealFunction& f, const std::vector<double>& breakpoints,
                          const QuadratureOptions& options) {
  std::priority_queue<Segment> heap;
  double frozen_value = 0.0;
  double frozen_error = 0.0;
  int intervals = 0;

  auto total = [&]() {
    double v = frozen_value, e = frozen_error;
    auto copy = heap;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    return std::pair{v, e};
  };

  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Segment s = kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    value += s.value;
    error += s.error;
    heap.push(s);
    ++intervals;
  }
  if (!std::isfinite(value) || !std::isfinite(error)) {
    throw Error(ErrorKind::quadrature, "integrand produced non-finite values");
  }

  int subdivisions = 0;
  while (error > std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
    if (heap.empty()) break;
    if (subdivisions >= options.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature did not converge after " << subdivisions
          << " subdivisions: achieved error " << error << " for value " << value;
      throw Error(ErrorKind::quadrature, msg.str());
    }
    Segment worst = heap.top();
    heap.pop();
    if (!splittable(worst)) {
      frozen_value += worst.value;
      frozen_error += worst.error;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    ++intervals;
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::quadrature, "integrand produced non-finite values");
    }
    // Running sums drift; resynchronize occasionally.
    if (subdivisions % 512 == 0) std::tie(value, error) = total();
  }
  std::tie(value, error) = total();
  if (error > std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
    std::ostringstream msg;
    msg << "quadrature hit roundoff limit: achieved error " << error << " for value " << value;
    throw Error(ErrorKind::quadrature, msg.str());
  }
  return QuadratureResult{value, error, intervals};
}

struct ScanPoint {
  double omega;
  double mass;
};

// Scan outward from each seed in steps of `step` until the mass |omega f| has
// stayed negligible for several consecutive octaves.
std::vector<ScanPoint> scan_octaves(const RealFunction& f, const std::vector<double>& seeds,
                                    double truncation, double step) {
  constexpr int kQuietOctaves = 4;
  const int quiet_steps = kQuietOctaves * static_cast<int>(std::ceil(std::log(2.0) / std::log(step)));
  constexpr double kMin = 1e-300;
  constexpr double kMax = 1e300;
  std::vector<ScanPoint> points;
  double max_mass = 0.0;
  auto sample = [&](double w) {
    const double v = w * f(w);
    const double mass = std::isfinite(v) ? std::abs(v) : 0.0;
    max_mass = std::max(max_mass, mass);
    points.push_back({w, mass});
    return mass;
  };
  for (double seed : seeds) sample(seed);
  for (double seed : seeds) {
    for (int direction : {+1, -1}) {
      int quiet = 0;
      double w = seed;
      while (quiet < quiet_steps) {
        w = direction > 0 ? w * step : w / step;
        if (w > kMax || w < kMin) break;
        const double mass = sample(w);
        quiet = (mass <= truncation * max_mass) ? quiet + 1 : 0;
      }
    }
  }
  return points;
}

}  // namespace

QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const QuadratureOptions& options) {
  if (!(a < b)) {
    if (a == b) return {};
    QuadratureResult r = integrate_interval(f, b, a, options);
    r.value = -r.value;
    return r;
  }
  std::vector<double> breakpoints{a};
  for (double h : options.hints) {
    if (h > a && h < b) breakpoints.push_back(h);
  }
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  return adaptive(f, breakpoints, options);
}

QuadratureResult integrate_half_line(const RealFunction& f, const QuadratureOptions& options) {
  std::vector<double> seeds;
  for (double h : options.hints) {
    if (h > 0.0 && std::isfinite(h)) seeds.push_back(h);
  }
  if (seeds.empty()) seeds.push_back(1.0);

  // Octaves in the integration variable: for g > 1 that is u = omega^g.
  const double step = std::pow(2.0, 1.0 / std::max(1.0, options.substitution_power));
  const std::vector<ScanPoint> points = scan_octaves(f, seeds, options.truncation, step);
  double max_mass = 0.0;
  for (const auto& p : points) max_mass = std::max(max_mass, p.mass);
  if (max_mass == 0.0) return {};

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& p : points) {
    if (p.mass > options.truncation * max_mass) {
      lo = std::min(lo, p.omega);
      hi = std::max(hi, p.omega);
    }
  }
  lo *= 0.5;
  hi *= 2.0;

  std::vector<double> omega_breaks;
  for (double w = lo; w < hi; w *= step) omega_breaks.push_back(w);
  omega_breaks.push_back(hi);
  for (double s : seeds) {
    if (s > lo && s < hi) omega_breaks.push_back(s);
  }
  std::sort(omega_breaks.begin(), omega_breaks.end());
  omega_breaks.erase(std::unique(omega_breaks.begin(), omega_breaks.end()), omega_breaks.end());

  const double g = options.substitution_power;
  if (!(g > 0.0)) throw Error(ErrorKind::argument, "substitution power must be positive");
  if (g == 1.0) return adaptive(f, omega_breaks, options);

  // omega = u^(1/g), d omega = (1/g) u^(1/g - 1) du. Outside [w_lo, w_hi] the
  // map would underflow or overflow u, so those octaves stay in omega.
  const double inv = 1.0 / g;
  const double w_lo = std::pow(1e-200, inv);
  const double w_hi = std::pow(1e200, inv);
  auto mapped = [&f, inv](double u) {
    if (u <= 0.0) return 0.0;
    const double omega = std::pow(u, inv);
    const double value = f(omega);
    if (value == 0.0) return 0.0;
    return value * inv * omega / u;
  };
  std::vector<double> below, middle, above;
  for (double w : omega_breaks) {
    if (w <= w_lo) below.push_back(w);
    if (w >= w_lo && w <= w_hi) middle.push_back(w);
    if (w >= w_hi) above.push_back(w);
  }
  const double first = omega_breaks.front();
  const double last = omega_breaks.back();
  if (first < w_lo && (below.empty() || below.back() < w_lo)) below.push_back(std::min(w_lo, last));
  if (last > w_hi && (above.empty() || above.front() > w_hi)) above.insert(above.begin(), std::max(w_hi, first));
  if (first < w_lo && last > w_lo && (middle.empty() || middle.front() > w_lo)) middle.insert(middle.begin(), w_lo);
  if (last > w_hi && first < w_hi && (middle.empty() || middle.back() < w_hi)) middle.push_back(w_hi);

  QuadratureResult total{};
  auto accumulate = [&total](const QuadratureResult& r) {
    total.value += r.value;
    total.error += r.error;
    total.intervals += r.intervals;
  };
  if (below.size() >= 2) accumulate(adaptive(f, below, options));
  if (middle.size() >= 2) {
    std::vector<double> u_breaks;
    u_breaks.reserve(middle.size());
    for (double w : middle) u_breaks.push_back(std::pow(w, g));
    u_breaks.erase(std::unique(u_breaks.begin(), u_breaks.end()), u_breaks.end());
    if (u_breaks.size() >= 2) accumulate(adaptive(mapped, u_breaks, options));
  }
  if (above.size() >= 2) accumulate(adaptive(f, above, options));
  return total;
}

QuadratureResult integrate_real_line(const RealFunction& f, const QuadratureOptions& options) {
  QuadratureOptions opts = options;
  for (double& h : opts.hints) h = std::abs(h);
  const QuadratureResult pos = integrate_half_line(f, opts);
  const QuadratureResult neg = integrate_half_line([&f](double w) { return f(-w); }, opts);
  return QuadratureResult{pos.value + neg.value, pos.error + neg.error,
                          pos.intervals + neg.intervals};
}

double ridders_derivative(const RealFunction& f, double x, double h0, double* error) {
  constexpr int kTable = 16;
  constexpr double kCon = 1.4;
  constexpr double kCon2 = kCon * kCon;
  constexpr double kSafe = 2.0;
  if (!(h0 > 0.0)) throw Error(ErrorKind::argument, "ridders_derivative: step must be positive");

  std::array<std::array<double, kTable>, kTable> a{};
  double h = h0;
  a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
  double best = a[0][0];
  double err = std::numeric_limits<double>::max();
  for (int i = 1; i < kTable; ++i) {
    h /= kCon;
    a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double fac = kCon2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kCon2;
      const double errt =
          std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (errt <= err) {
        err = errt;
        best = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
  }
  if (error) *error = err;
  return best;
}

}  // namespace morsekit
