#pragma once

// Adaptive replication policy primitives.
//
// On every loss (real or virtual) for content c the coordinator evicts one
// available replica of a victim content c' != c (chosen by RANDOM, LRL or
// LFL) from an idle server not already storing c, and writes c into the
// freed slot. Virtual losses are synthetic events generated at request
// arrivals with probability p_c(Z_c) calibrated so their rate is
// proportional to the true loss rate, which accelerates adaptation for
// well-replicated contents whose real losses are rare.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lossnet/math.hpp"

namespace lossnet {

enum class EvictionRule { kRandom, kLrl, kLfl };

inline const char* to_string(EvictionRule rule) {
  switch (rule) {
    case EvictionRule::kRandom: return "random";
    case EvictionRule::kLrl: return "lrl";
    case EvictionRule::kLfl: return "lfl";
  }
  return "?";
}

inline EvictionRule eviction_rule_from_string(const std::string& s) {
  if (s == "random") return EvictionRule::kRandom;
  if (s == "lrl") return EvictionRule::kLrl;
  if (s == "lfl") return EvictionRule::kLfl;
  throw std::invalid_argument("unknown eviction rule: " + s);
}

// Ordered list of contents, least-recently-lost first, with O(1)
// move-to-tail. Doubly linked list over index arrays.
class LrlList {
 public:
  explicit LrlList(std::size_t n) : prev_(n), next_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      prev_[i] = static_cast<long>(i) - 1;
      next_[i] = (i + 1 < n) ? static_cast<long>(i + 1) : -1;
    }
    head_ = n > 0 ? 0 : -1;
    tail_ = n > 0 ? static_cast<long>(n - 1) : -1;
  }

  // Content c just lost (really or virtually): move to most-recent end.
  void touch(std::size_t c) {
    auto ci = static_cast<long>(c);
    if (ci == tail_) return;
    long p = prev_[c], nx = next_[c];
    if (p >= 0) next_[static_cast<std::size_t>(p)] = nx;
    if (nx >= 0) prev_[static_cast<std::size_t>(nx)] = p;
    if (ci == head_) head_ = nx;
    prev_[c] = tail_;
    next_[c] = -1;
    if (tail_ >= 0) next_[static_cast<std::size_t>(tail_)] = ci;
    tail_ = ci;
    if (head_ < 0) head_ = ci;
  }

  long head() const { return head_; }
  long next_of(std::size_t c) const { return next_[c]; }

  // Verification helper: the full order, least recent first.
  std::vector<std::size_t> order() const {
    std::vector<std::size_t> out;
    for (long i = head_; i >= 0; i = next_[static_cast<std::size_t>(i)]) {
      out.push_back(static_cast<std::size_t>(i));
    }
    return out;
  }

 private:
  std::vector<long> prev_, next_;
  long head_ = -1, tail_ = -1;
};

// Per-content exponentially decayed loss counters: each loss contributes
// weight exp(-(now - t_loss)/tau) when read. Stored un-decayed relative to a
// moving epoch so that updates are O(1) and ordering is preserved (decay
// multiplies every estimate by the same factor). Rebased when values grow
// large to avoid overflow.
class LflEstimator {
 public:
  LflEstimator(std::size_t n, double tau) : tau_(tau), value_(n, 0.0) {
    if (!(tau > 0.0)) throw std::invalid_argument("LFL tau must be > 0");
  }

  void record_loss(std::size_t c, double now) {
    double w = std::exp((now - epoch_) / tau_);
    value_[c] += w;
    if (value_[c] > 1e200) rebase(now);
  }

  // Decayed estimate at time `now`.
  double estimate(std::size_t c, double now) const {
    return value_[c] * std::exp((epoch_ - now) / tau_);
  }

  // Comparisons at a common instant can use the raw values directly.
  double raw(std::size_t c) const { return value_[c]; }

 private:
  void rebase(double now) {
    double f = std::exp((epoch_ - now) / tau_);
    for (double& v : value_) v *= f;
    epoch_ = now;
  }

  double tau_;
  double epoch_ = 0.0;
  std::vector<double> value_;
};

// Admissible-range endpoint for virtual losses: z*_c = (D_c - lambda_c)/theta,
// floored at zero (contents with lambda >= D generate no virtual losses).
inline double z_star(double lambda_hat, long D_c, double theta_hat) {
  if (!(theta_hat > 0.0)) throw std::invalid_argument("theta_hat must be > 0");
  double v = (static_cast<double>(D_c) - lambda_hat) / theta_hat;
  return v > 0.0 ? v : 0.0;
}

// Subsampling factor q_c(z) = prod_{i=1..z} (lambda + i*theta)/(D - i + 1).
// Equals pi(0)/pi(z) of the availability chain built with the same
// parameters. Log space; requires z < D.
inline double q_factor(double lambda_hat, long D_c, double theta_hat, long z) {
  if (z < 0 || z >= D_c) throw std::invalid_argument("q_factor needs 0 <= z < D");
  double lg = 0.0;
  for (long i = 1; i <= z; ++i) {
    lg += std::log(lambda_hat + static_cast<double>(i) * theta_hat) -
          std::log(static_cast<double>(D_c - i + 1));
  }
  return std::exp(lg);
}

// Live estimates maintained by the simulation for the virtual-loss mechanism.
struct OnlineEstimates {
  double rho_eff = 0.0;    // busy servers / m
  double theta_eff = 0.0;  // rho_eff / (1 - rho_eff)
  double min_z_star = 0.0; // mean z* over the k least-popular tracked contents
  // lambda_hat_c = current in-service count, owned by the engine.
};

// p_c(Z) = (min z* / z*_c) * 1(0 < Z <= z*_c) * q_c(Z), clamped into [0, 1].
// Evaluated at a request arrival with the pre-assignment Z. Returns 0 when
// the estimates degenerate (theta 0, all-busy, z* = 0).
inline double virtual_loss_probability(double lambda_hat, long D_c, long Z_c,
                                       const OnlineEstimates& est) {
  if (Z_c <= 0) return 0.0;  // a real loss, handled separately
  if (!(est.theta_eff > 0.0) || est.rho_eff >= 1.0) return 0.0;
  if (est.min_z_star <= 0.0) return 0.0;
  double zs = z_star(lambda_hat, D_c, est.theta_eff);
  if (zs <= 0.0 || static_cast<double>(Z_c) > zs) return 0.0;
  double p = est.min_z_star / zs *
             q_factor(lambda_hat, D_c, est.theta_eff, Z_c);
  if (p < 0.0) return 0.0;
  return p > 1.0 ? 1.0 : p;
}

}  // namespace lossnet
