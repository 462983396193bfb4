#pragma once

// Mean-field analysis of the loss network.
//
// Each content c is approximated by a one-dimensional birth-death chain on
// its number of available replicas Z_c in {0..D_c}: up-rate D_c - z (busy
// replicas complete service), down-rate lambda_c + z*theta_eff (own arrivals
// plus contention from requests for co-stored contents). theta_eff =
// rho_eff/(1-rho_eff) where rho_eff = rho*(1 - gamma_bar/lambda_bar) is the
// load actually absorbed by the edge; gamma_bar solves a fixed point since
// the per-content loss rates depend on it.
//
// Two per-content loss-rate estimators are exposed and reported side by side:
//  - gamma_exact  = lambda_c * pi(Z_c = 0) under the exactly normalized chain;
//  - gamma_closed = the log-space closed-form asymptotic
//        lambda * C(lambda) * (1+1/theta)^(-D) * D^(lambda/theta),
//        C(lambda) = exp(-EulerGamma*lambda/theta)
//                    / ((1+theta)^(lambda/theta) * Gamma(1+lambda/theta)).
// The closed form is only meaningful on its decreasing branch
// (D >= lambda/ln(1+1/theta)); both values are clamped to <= lambda. The
// fixed point iterates on the closed form; the exact aggregate at the solved
// operating point is also reported.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lossnet/math.hpp"
#include "lossnet/model.hpp"
#include "lossnet/replication.hpp"

namespace lossnet {

struct EffectiveParams {
  double rho_eff = 0.0;
  double theta_eff = 0.0;
  std::size_t d = 0;

  static EffectiveParams from_gamma_bar(const SystemParams& params,
                                        double gamma_bar) {
    if (params.d < 2) {
      throw std::invalid_argument("mean-field analysis requires d >= 2");
    }
    double rho_eff = params.rho * (1.0 - gamma_bar / params.lambda_bar);
    if (!(rho_eff >= 0.0) || !(rho_eff < 1.0)) {
      throw std::invalid_argument("rho_eff outside [0, 1)");
    }
    EffectiveParams out;
    out.rho_eff = rho_eff;
    out.theta_eff = rho_eff / (1.0 - rho_eff);
    out.d = params.d;
    return out;
  }
};

struct AvailabilityDistribution {
  std::vector<double> pi;  // pi[z] = P(Z_c = z), z = 0..D_c
  double mean = 0.0;
  long mode = 0;
};

// Exactly normalized stationary distribution of the availability chain,
// computed by the local-balance recursion
//   (D - z) * pi(z) = (lambda + (z+1)*theta) * pi(z+1)
// accumulated in log space and normalized by the full sum (no closed-form
// normalization shortcut).
inline AvailabilityDistribution availability_distribution(double lambda_c,
                                                          long D_c,
                                                          double theta_eff) {
  if (D_c < 0) throw std::invalid_argument("negative replica count");
  if (!(theta_eff > 0.0)) throw std::invalid_argument("theta_eff must be > 0");
  AvailabilityDistribution out;
  const auto D = static_cast<std::size_t>(D_c);
  std::vector<double> logpi(D + 1, 0.0);
  for (std::size_t z = 0; z < D; ++z) {
    logpi[z + 1] = logpi[z] +
                   std::log(static_cast<double>(D - z)) -
                   std::log(lambda_c + static_cast<double>(z + 1) * theta_eff);
  }
  double max_log = *std::max_element(logpi.begin(), logpi.end());
  out.pi.resize(D + 1);
  double total = 0.0;
  for (std::size_t z = 0; z <= D; ++z) {
    out.pi[z] = std::exp(logpi[z] - max_log);
    total += out.pi[z];
  }
  double mean = 0.0;
  double best = -1.0;
  for (std::size_t z = 0; z <= D; ++z) {
    out.pi[z] /= total;
    mean += static_cast<double>(z) * out.pi[z];
    if (out.pi[z] > best) {
      best = out.pi[z];
      out.mode = static_cast<long>(z);
    }
  }
  out.mean = mean;
  return out;
}

inline double loss_rate_exact(double lambda_c, long D_c, double theta_eff) {
  if (D_c <= 0) return lambda_c;
  if (lambda_c == 0.0) return 0.0;
  return lambda_c * availability_distribution(lambda_c, D_c, theta_eff).pi[0];
}

// Closed-form asymptotic loss rate (see header comment); log space, clamped
// to <= lambda. D = 0 means every request is lost.
inline double loss_rate_closed_form(double lambda_c, long D_c,
                                    double theta_eff) {
  if (!(theta_eff > 0.0)) throw std::invalid_argument("theta_eff must be > 0");
  if (D_c <= 0) return lambda_c;
  if (lambda_c == 0.0) return 0.0;
  double s = lambda_c / theta_eff;
  double lg = std::log(std::max(lambda_c, kLogFloor)) - kEulerGamma * s -
              s * std::log1p(theta_eff) - log_gamma(1.0 + s) -
              static_cast<double>(D_c) * std::log1p(1.0 / theta_eff) +
              s * std::log(static_cast<double>(D_c));
  return std::min(lambda_c, std::exp(lg));
}

// One-sided replica-derivative of the closed form, dominant orders only:
//   dGamma(D) ~= -gamma(D)/(1+theta) * (1 - lambda/D).
inline double loss_derivative(double lambda_c, long D_c, double theta_eff) {
  if (D_c < 1) throw std::invalid_argument("loss_derivative needs D >= 1");
  double g = loss_rate_closed_form(lambda_c, D_c, theta_eff);
  return -g / (1.0 + theta_eff) *
         (1.0 - lambda_c / static_cast<double>(D_c));
}

struct MeanFieldSolution {
  EffectiveParams effective;
  std::vector<double> gamma_closed;  // per content, at the solved theta_eff
  std::vector<double> gamma_exact;
  double gamma_bar = 0.0;        // fixed point of the closed-form average
  double gamma_bar_exact = 0.0;  // exact-chain average at the solved point
  double inefficiency = 0.0;        // gamma_bar / lambda_bar
  double inefficiency_exact = 0.0;  // gamma_bar_exact / lambda_bar
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

struct FixedPointOptions {
  double tolerance = 1e-10;  // relative residual on gamma_bar
  std::size_t max_iterations = 10000;
  bool force_bisection = false;  // for cross-validation against damping
};

namespace detail {

// Average closed-form loss rate when the input average is gamma_in.
inline double fixed_point_map(const Catalog& catalog,
                              const ReplicationProfile& profile,
                              const SystemParams& params, double gamma_in,
                              double* theta_out = nullptr) {
  EffectiveParams eff = EffectiveParams::from_gamma_bar(params, gamma_in);
  if (theta_out != nullptr) *theta_out = eff.theta_eff;
  double sum = 0.0;
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    sum += loss_rate_closed_form(catalog.lambda[c], profile.replicas[c],
                                 eff.theta_eff);
  }
  return sum / static_cast<double>(catalog.size());
}

}  // namespace detail

// Solves gamma_bar = F(gamma_bar) where F evaluates the closed form at the
// effective parameters implied by the input. F is decreasing in gamma_bar, so
// the fixed point is unique in [0, lambda_bar]. Damped iteration
// g <- (g + F(g))/2; if the residual fails to shrink (oscillation), the
// solver falls back to bisection on the sign of F(g) - g.
inline MeanFieldSolution fixed_point_solve(const Catalog& catalog,
                                           const ReplicationProfile& profile,
                                           const SystemParams& params,
                                           FixedPointOptions opts = {}) {
  catalog.validate(params.lambda_bar);
  profile.validate(params);
  const double lambda_bar = params.lambda_bar;

  MeanFieldSolution sol;
  double g = 0.0;
  double residual = 0.0;
  std::size_t it = 0;
  bool bisecting = opts.force_bisection;
  double lo = 0.0, hi = lambda_bar;
  double prev_residual = std::numeric_limits<double>::infinity();

  for (; it < opts.max_iterations; ++it) {
    double out = detail::fixed_point_map(catalog, profile, params, g);
    residual = std::abs(out - g) / std::max(std::abs(out), 1e-30);
    if (residual <= opts.tolerance) {
      g = out;
      break;
    }
    if (!bisecting && residual > prev_residual) bisecting = true;
    prev_residual = residual;
    if (bisecting) {
      // F decreasing: F(g) > g means the fixed point lies above g.
      if (out > g) {
        lo = g;
      } else {
        hi = g;
      }
      g = 0.5 * (lo + hi);
      if (hi - lo <= opts.tolerance * std::max(hi, 1e-30)) {
        g = detail::fixed_point_map(catalog, profile, params, g);
        break;
      }
    } else {
      g = 0.5 * (g + out);
    }
  }

  sol.iterations = it;
  sol.residual = residual;
  sol.converged = residual <= opts.tolerance ||
                  (hi - lo) <= opts.tolerance * std::max(hi, 1e-30);
  sol.effective = EffectiveParams::from_gamma_bar(params, g);

  const std::size_t n = catalog.size();
  sol.gamma_closed.resize(n);
  sol.gamma_exact.resize(n);
  double sum_closed = 0.0, sum_exact = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    sol.gamma_closed[c] = loss_rate_closed_form(
        catalog.lambda[c], profile.replicas[c], sol.effective.theta_eff);
    sol.gamma_exact[c] = loss_rate_exact(
        catalog.lambda[c], profile.replicas[c], sol.effective.theta_eff);
    sum_closed += sol.gamma_closed[c];
    sum_exact += sol.gamma_exact[c];
  }
  sol.gamma_bar = sum_closed / static_cast<double>(n);
  sol.gamma_bar_exact = sum_exact / static_cast<double>(n);
  sol.inefficiency = sol.gamma_bar / lambda_bar;
  sol.inefficiency_exact = sol.gamma_bar_exact / lambda_bar;
  return sol;
}

}  // namespace lossnet
