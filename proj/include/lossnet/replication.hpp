#pragma once

// Replication profiles: integer replica counts per content, summing exactly
// to the total cache capacity m*d, each bounded by a per-content cap
// (default 95% of the servers).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lossnet/model.hpp"

namespace lossnet {

struct ReplicationProfile {
  std::vector<long> replicas;
  double cap_fraction = 0.95;

  std::size_t size() const { return replicas.size(); }

  long cap_value(std::size_t m) const {
    return static_cast<long>(std::floor(cap_fraction * static_cast<double>(m)));
  }

  void validate(const SystemParams& params) const {
    if (replicas.size() != params.n) {
      throw std::invalid_argument("profile length != n");
    }
    long cap = cap_value(params.m);
    long long total = 0;
    for (long r : replicas) {
      if (r < 0) throw std::invalid_argument("negative replica count");
      if (r > cap) throw std::invalid_argument("replica count above cap");
      total += r;
    }
    if (total != static_cast<long long>(params.total_slots())) {
      throw std::invalid_argument("profile does not sum to m*d");
    }
  }
};

// Largest-remainder rounding: result_c is floor(t_c) or ceil(t_c), the sum
// equals `budget` exactly, surplus units go to the largest fractional parts,
// ties broken by lower index. Requires sum(targets) == budget within 1e-6.
inline std::vector<long> integer_budget_round(const std::vector<double>& targets,
                                              long long budget) {
  for (double t : targets) {
    if (t < 0.0) throw std::invalid_argument("negative rounding target");
  }
  double total = std::accumulate(targets.begin(), targets.end(), 0.0);
  if (std::abs(total - static_cast<double>(budget)) > 1e-6) {
    throw std::invalid_argument("rounding targets do not sum to budget");
  }
  const std::size_t n = targets.size();
  std::vector<long> out(n);
  long long floor_sum = 0;
  std::vector<std::pair<double, std::size_t>> rem(n);
  for (std::size_t i = 0; i < n; ++i) {
    double fl = std::floor(targets[i]);
    out[i] = static_cast<long>(fl);
    floor_sum += out[i];
    rem[i] = {targets[i] - fl, i};
  }
  long long extra = budget - floor_sum;
  // Sort by descending remainder, ascending index on ties.
  std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (long long k = 0; k < extra; ++k) out[rem[static_cast<std::size_t>(k)].second] += 1;
  return out;
}

// Clamps real-valued targets into [lo_zero ? 0 : -inf, cap], re-normalizing
// the unclamped mass after each clamping pass so the total stays `budget`,
// then rounds with integer_budget_round. Shared by the proportional and
// optimized profile constructors.
inline std::vector<long> clamp_renormalize_round(std::vector<double> targets,
                                                 long long budget, long cap,
                                                 bool floor_at_zero) {
  const std::size_t n = targets.size();
  std::vector<bool> fixed(n, false);
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (fixed[i]) continue;
      if (targets[i] > static_cast<double>(cap)) {
        targets[i] = static_cast<double>(cap);
        fixed[i] = true;
        changed = true;
      } else if (floor_at_zero && targets[i] < 0.0) {
        targets[i] = 0.0;
        fixed[i] = true;
        changed = true;
      }
    }
    if (!changed) break;
    double fixed_mass = 0.0, free_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      (fixed[i] ? fixed_mass : free_mass) += targets[i];
    }
    double free_budget = static_cast<double>(budget) - fixed_mass;
    if (free_budget < 0.0 || (free_mass <= 0.0 && free_budget > 1e-9)) {
      throw std::invalid_argument("capacity infeasible under cap");
    }
    if (free_mass > 0.0) {
      double scale = free_budget / free_mass;
      for (std::size_t i = 0; i < n; ++i) {
        if (!fixed[i]) targets[i] *= scale;
      }
    }
  }
  return integer_budget_round(targets, budget);
}

// Proportional replication: targets t_c = lambda_c * m*d / sum(lambda),
// clamped at the cap, renormalized, and budget-rounded.
inline ReplicationProfile proportional_replication(const Catalog& catalog,
                                                   const SystemParams& params,
                                                   double cap_fraction = 0.95) {
  ReplicationProfile profile;
  profile.cap_fraction = cap_fraction;
  long cap = profile.cap_value(params.m);
  auto budget = static_cast<long long>(params.total_slots());
  if (budget > static_cast<long long>(params.n) * cap) {
    throw std::invalid_argument("m*d exceeds n * cap: infeasible");
  }
  double total = catalog.total();
  if (!(total > 0.0)) throw std::invalid_argument("catalog has zero mass");
  std::vector<double> targets(params.n);
  for (std::size_t c = 0; c < params.n; ++c) {
    targets[c] = catalog.lambda[c] * static_cast<double>(budget) / total;
  }
  profile.replicas = clamp_renormalize_round(std::move(targets), budget, cap,
                                             /*floor_at_zero=*/false);
  profile.validate(params);
  return profile;
}

// Explicit per-class replica counts (used when a scenario pins them).
inline ReplicationProfile profile_from_classes(const ClassSpec& spec,
                                               const SystemParams& params,
                                               double cap_fraction = 0.95) {
  ReplicationProfile profile;
  profile.cap_fraction = cap_fraction;
  for (const auto& cls : spec) {
    if (cls.replicas < 0) {
      throw std::invalid_argument("class without replica count");
    }
    profile.replicas.insert(profile.replicas.end(), cls.count, cls.replicas);
  }
  profile.validate(params);
  return profile;
}

}  // namespace lossnet
