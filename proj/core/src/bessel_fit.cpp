#include <algorithm>
#include <tuple>
#include <cmath>
#include <string>

#include "morsekit/errors.hpp"
#include "morsekit/parallel.hpp"
#include "morsekit/superfamily.hpp"

namespace morsekit {
namespace {

class BesselObjective {
 public:
  explicit BesselObjective(const QuadratureOptions& options) : options_(options) {
    options_.hints = {1.0};
    bessel_energy_ = integrate_half_line(
                         [](double w) {
                           const double v = bessel_spectrum(w);
                           return v * v;
                         },
                         options_)
                         .value;
  }

  double operator()(double beta, double gamma) const {
    const MorseParams p(beta, gamma);
    auto phi = [&p](double w) { return eval_rescaled_spectrum(p, w); };
    const double cross =
        integrate_half_line([&](double w) { return phi(w) * bessel_spectrum(w); }, options_).value;
    const double energy = integrate_half_line(
                              [&](double w) {
                                const double v = phi(w);
                                return v * v;
                              },
                              options_)
                              .value;
    return cross * cross / (energy * bessel_energy_);
  }

 private:
  QuadratureOptions options_;
  double bessel_energy_ = 0.0;
};

double log_grid(double lo, double hi, int n, int i) {
  if (n == 1) return lo;
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
}

}  // namespace

FitResult bessel_fit(const FitOptions& options) {
  if (!(options.beta_lo > 0.0) || !(options.beta_hi >= options.beta_lo) ||
      !(options.gamma_lo > 0.0) || !(options.gamma_hi >= options.gamma_lo)) {
    throw Error(ErrorKind::argument, "bessel_fit: grid bounds must be positive and ordered");
  }
  if (options.beta_points < 1 || options.gamma_points < 1) {
    throw Error(ErrorKind::argument, "bessel_fit: grid needs at least one point per axis");
  }
  if (!(options.step_tol > 0.0)) {
    throw Error(ErrorKind::argument, "bessel_fit: step tolerance must be positive");
  }
  const BesselObjective objective(options.quadrature);
  const int nb = options.beta_points;
  const int ng = options.gamma_points;

  std::vector<FitSample> trace(static_cast<std::size_t>(nb) * static_cast<std::size_t>(ng));
  parallel_for(trace.size(), options.threads, [&](std::size_t k) {
    const int i = static_cast<int>(k / static_cast<std::size_t>(ng));
    const int j = static_cast<int>(k % static_cast<std::size_t>(ng));
    const double b = log_grid(options.beta_lo, options.beta_hi, nb, i);
    const double g = log_grid(options.gamma_lo, options.gamma_hi, ng, j);
    trace[k] = FitSample{b, g, objective(b, g)};
  });

  // First maximum in row-major order.
  const auto best_it = std::max_element(trace.begin(), trace.end(),
                                        [](const FitSample& a, const FitSample& b) {
                                          return a.alpha_sq < b.alpha_sq;
                                        });
  // Refine in (ln P, ln gamma) with P = sqrt(beta gamma): near the optimum the
  // alpha^2 ridge runs along constant P, which these axes follow.
  double u = 0.5 * (std::log(best_it->beta) + std::log(best_it->gamma));
  double v = std::log(best_it->gamma);
  double best = best_it->alpha_sq;
  double beta_best = best_it->beta;
  double gamma_best = best_it->gamma;

  auto params_at = [](double pu, double pv) {
    return std::pair{std::exp(2.0 * pu - pv), std::exp(pv)};
  };
  auto feasible = [&](double pu, double pv) {
    const auto [b, g] = params_at(pu, pv);
    return b >= options.beta_lo && b <= options.beta_hi && g >= options.gamma_lo &&
           g <= options.gamma_hi;
  };
  int evaluations = 0;
  auto value_at = [&](double pu, double pv) {
    ++evaluations;
    const auto [b, g] = params_at(pu, pv);
    return objective(b, g);
  };

  const double lx = std::log(options.beta_hi / options.beta_lo);
  const double ly = std::log(options.gamma_hi / options.gamma_lo);
  double step[2] = {nb > 1 ? 0.5 * lx / (nb - 1) : 0.5 * ly / std::max(ng - 1, 1),
                    ng > 1 ? ly / (ng - 1) : lx / std::max(nb - 1, 1)};

  // Hooke-Jeeves exploration: one coordinate at a time, + before -.
  auto explore = [&](double& pu, double& pv, double& fval) {
    for (int axis = 0; axis < 2; ++axis) {
      double& coord = axis == 0 ? pu : pv;
      const double start = coord;
      for (double trial : {start + step[axis], start - step[axis]}) {
        coord = trial;
        if (feasible(pu, pv)) {
          const double value = value_at(pu, pv);
          if (value > fval) {
            fval = value;
            break;
          }
        }
        coord = start;
      }
    }
  };

  while (std::max(step[0], step[1]) >= options.step_tol) {
    double nu = u, nv = v, nf = best;
    explore(nu, nv, nf);
    if (!(nf > best)) {
      step[0] *= 0.5;
      step[1] *= 0.5;
      continue;
    }
    // Pattern moves along the accumulated direction while they keep paying off.
    while (nf > best) {
      const double du = nu - u, dv = nv - v;
      u = nu;
      v = nv;
      best = nf;
      std::tie(beta_best, gamma_best) = params_at(u, v);
      double pu = u + du, pv = v + dv;
      if (!feasible(pu, pv)) break;
      double pf = value_at(pu, pv);
      explore(pu, pv, pf);
      if (pf > best) {
        nu = pu;
        nv = pv;
        nf = pf;
      }
    }
  }

  return FitResult{MorseParams(beta_best, gamma_best), best, std::move(trace), evaluations};
}

}  // namespace morsekit
