#pragma once

// Static replication optimizers.
//
// Two constructions are provided and reported side by side:
//  - optimized_replication: the near-uniform second-order profile
//        D_c = Dbar + (lambda_c - lambda_bar) * ln(Dbar)
//                     / (theta_eff * ln(1 + 1/theta_eff)),
//    which equalizes the dominant exponent of every content's closed-form
//    loss rate. Asymptotically optimal; at finite sizes it can lose a
//    constant factor against the true optimum.
//  - greedy_marginal_allocation: exact marginal-gain greedy on the *exact*
//    birth-death loss rate lambda*pi(0). The exact rate is decreasing and
//    (empirically, verified in tests) integer-convex in D, so the greedy
//    result is the optimal integer profile and serves as the oracle. The
//    closed-form asymptotic cannot be used as the greedy objective: below
//    D ~ lambda/ln(1+1/theta) it is non-monotone in D (it *rises* toward a
//    peak near D ~ lambda), which breaks convexity and starves popular
//    contents of replicas.

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lossnet/meanfield.hpp"
#include "lossnet/model.hpp"
#include "lossnet/replication.hpp"

namespace lossnet {

struct OptimizerReport {
  ReplicationProfile profile;
  double gamma_bar_predicted = 0.0;  // closed-form average over the profile
  double coefficient = 0.0;          // ln(Dbar)/(theta*ln(1+1/theta))
  double d_bar = 0.0;                // m*d/n
  double theta_eff = 0.0;
  std::string method;  // "closed_form" or "greedy"
};

// Predicted inefficiency under optimal replication: the loss rate of an
// imaginary average content (popularity lambda_bar, replication Dbar),
// dominant term only, divided by lambda_bar.
inline double predicted_optimal_inefficiency(const SystemParams& params,
                                             double theta_eff) {
  double d_bar = static_cast<double>(params.total_slots()) /
                 static_cast<double>(params.n);
  if (!(d_bar > 1.0)) throw std::invalid_argument("requires Dbar > 1");
  if (!(theta_eff > 0.0)) throw std::invalid_argument("theta_eff must be > 0");
  double lg = -d_bar * std::log1p(1.0 / theta_eff) +
              params.lambda_bar / theta_eff * std::log(d_bar);
  return std::exp(lg) / params.lambda_bar;
}

inline OptimizerReport optimized_replication(const Catalog& catalog,
                                             const SystemParams& params,
                                             double theta_eff,
                                             double cap_fraction = 0.95) {
  OptimizerReport report;
  report.method = "closed_form";
  report.theta_eff = theta_eff;
  report.d_bar = static_cast<double>(params.total_slots()) /
                 static_cast<double>(params.n);
  if (!(report.d_bar > 1.0)) throw std::invalid_argument("requires Dbar > 1");
  if (!(theta_eff > 0.0)) throw std::invalid_argument("theta_eff must be > 0");
  report.coefficient = std::log(report.d_bar) /
                       (theta_eff * std::log1p(1.0 / theta_eff));

  std::vector<double> targets(params.n);
  for (std::size_t c = 0; c < params.n; ++c) {
    targets[c] = report.d_bar + (catalog.lambda[c] - params.lambda_bar) *
                                    report.coefficient;
  }
  report.profile.cap_fraction = cap_fraction;
  long cap = report.profile.cap_value(params.m);
  report.profile.replicas = clamp_renormalize_round(
      std::move(targets), static_cast<long long>(params.total_slots()), cap,
      /*floor_at_zero=*/true);
  report.profile.validate(params);

  double sum = 0.0;
  for (std::size_t c = 0; c < params.n; ++c) {
    sum += loss_rate_closed_form(catalog.lambda[c],
                                 report.profile.replicas[c], theta_eff);
  }
  report.gamma_bar_predicted = sum / static_cast<double>(params.n);
  return report;
}

// Greedy marginal allocation on the exact loss rate: hand the next replica
// to the content whose loss rate drops the most. Lazy priority queue keyed
// (gain, content), stale entries detected via the stored replica count;
// ties broken by lower content index (the tuple comparison handles this
// because equal gains compare by index ascending after negation).
inline OptimizerReport greedy_marginal_allocation(const Catalog& catalog,
                                                  const SystemParams& params,
                                                  double theta_eff,
                                                  double cap_fraction = 0.95) {
  OptimizerReport report;
  report.method = "greedy";
  report.theta_eff = theta_eff;
  report.d_bar = static_cast<double>(params.total_slots()) /
                 static_cast<double>(params.n);
  report.coefficient = std::log(report.d_bar) /
                       (theta_eff * std::log1p(1.0 / theta_eff));
  report.profile.cap_fraction = cap_fraction;
  long cap = report.profile.cap_value(params.m);
  auto budget = static_cast<long long>(params.total_slots());
  if (budget > static_cast<long long>(params.n) * cap) {
    throw std::invalid_argument("m*d exceeds n * cap: infeasible");
  }

  const std::size_t n = params.n;
  std::vector<long> D(n, 0);
  auto gain = [&](std::size_t c) {
    return loss_rate_exact(catalog.lambda[c], D[c], theta_eff) -
           loss_rate_exact(catalog.lambda[c], D[c] + 1, theta_eff);
  };
  // Max-heap on (gain, -index) == min-heap on (-gain, index).
  using Entry = std::tuple<double, std::size_t, long>;  // -gain, c, D-at-push
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::size_t c = 0; c < n; ++c) heap.emplace(-gain(c), c, 0L);

  for (long long placed = 0; placed < budget;) {
    if (heap.empty()) throw std::logic_error("greedy heap exhausted");
    auto [neg_gain, c, d_at_push] = heap.top();
    heap.pop();
    if (d_at_push != D[c]) continue;  // stale entry
    D[c] += 1;
    ++placed;
    if (D[c] < cap) heap.emplace(-gain(c), c, D[c]);
  }
  report.profile.replicas = std::move(D);
  report.profile.validate(params);

  double sum = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    sum += loss_rate_exact(catalog.lambda[c], report.profile.replicas[c],
                           theta_eff);
  }
  report.gamma_bar_predicted = sum / static_cast<double>(n);
  return report;
}

}  // namespace lossnet
