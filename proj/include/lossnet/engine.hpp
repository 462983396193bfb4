#pragma once

// Discrete-event simulation of the edge-cache loss network.
//
// Dynamics: requests arrive in one aggregate Poisson stream of rate
// sum(lambda); each event draws its content from an alias table. A request
// for c finding Z_c > 0 available (idle) replicas occupies a uniformly
// random one for an exponential(1) service time, making that server's other
// d-1 cached contents unavailable meanwhile; with Z_c = 0 the request is
// lost. Optional adaptive replication reacts to losses; optional virtual
// losses accelerate it (see policy.hpp).
//
// State is maintained so every event costs O(d) plus heap maintenance:
// replica lists per content are partitioned idle-first (the first Z_c
// entries are the idle ones) with back-pointers from server slots into the
// lists, so availability updates are constant-time swaps.
//
// Determinism: one RNG stream drives everything; for a fixed (config, seed)
// the draw order is part of the contract:
//   arrival event:  content (alias) -> [server pick if Z>0] ->
//                   [service time if served] -> [victim draws on real loss]
//                   -> [virtual coin if enabled and Z_pre>0] ->
//                   [victim draws on virtual loss] -> next inter-arrival.
// Departures consume no randomness. Ties between a departure and the
// pending arrival at the same instant process the departure first.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "lossnet/alias.hpp"
#include "lossnet/graph.hpp"
#include "lossnet/model.hpp"
#include "lossnet/policy.hpp"
#include "lossnet/replication.hpp"
#include "lossnet/rng.hpp"

namespace lossnet {

struct SimOptions {
  double horizon = 1e4;
  double warmup = 0.0;  // callers usually pass 20% of the horizon

  bool adaptive = false;
  EvictionRule rule = EvictionRule::kRandom;
  double lfl_tau = 500.0;

  bool virtual_losses = false;
  std::size_t track_k = 10;  // contents tracked for the min-z* estimate
  // The min-z* running mean refreshes at every tracked-content departure;
  // re-picking *which* contents are tracked is throttled to every this many
  // refreshes (the ranking of the least-popular tail moves slowly).
  std::size_t track_reselect_every = 100;

  double snapshot_every = 0.0;  // 0 = no replica-trajectory snapshots
  std::size_t decile_count = 10;

  bool debug_checks = false;  // full state audit every 10^4 events
};

struct SimMetrics {
  // Per content.
  std::vector<std::uint64_t> arrivals;   // post-warmup
  std::vector<std::uint64_t> losses;     // post-warmup
  std::vector<std::uint64_t> virtual_losses;
  std::vector<std::uint64_t> evictions;  // times this content was evicted
  std::vector<double> z_mean;            // time-averaged available replicas
  std::vector<double> replicas_mean;     // time-averaged replica count
  std::vector<long> final_replicas;
  std::vector<std::vector<double>> z_prob;  // time-weighted Z histogram

  // Global.
  double measured_time = 0.0;  // horizon - warmup
  double busy_fraction = 0.0;
  std::uint64_t total_arrivals = 0;
  std::uint64_t total_losses = 0;
  double inefficiency = 0.0;  // total_losses / total_arrivals
  std::uint64_t events_processed = 0;
  std::uint64_t repair_fetches = 0;      // data-center fetches for new copies
  std::uint64_t skipped_creations = 0;   // losses with no feasible slot
  std::vector<std::string> warnings;

  // Replica-trajectory snapshots (adaptive runs): decile g holds contents
  // with rank in [g*n/10, (g+1)*n/10); values are instantaneous means.
  std::vector<double> snapshot_times;
  std::vector<std::vector<double>> snapshot_decile_means;

  double loss_rate(std::size_t c) const {
    return measured_time > 0.0
               ? static_cast<double>(losses[c]) / measured_time
               : 0.0;
  }
};

class Simulator {
 public:
  Simulator(const Catalog& catalog, const ReplicationProfile& profile,
            const SystemParams& params, const SimOptions& opts,
            std::uint64_t seed)
      : params_(params),
        opts_(opts),
        lambda_(catalog.lambda),
        rng_(seed),
        alias_(catalog.lambda),
        total_rate_(catalog.total()) {
    if (opts.horizon <= opts.warmup || opts.warmup < 0.0) {
      throw std::invalid_argument("need horizon > warmup >= 0");
    }
    if (opts_.adaptive || opts_.virtual_losses) {
      if (params_.d < 2) {
        throw std::invalid_argument("adaptive/virtual modes require d >= 2");
      }
    }
    double stability = 10.0 * params_.rho / ((1.0 - params_.rho) * (1.0 - params_.rho));
    if (static_cast<double>(params_.m) < stability) {
      warn_ = "m below 10*rho/(1-rho)^2: instantaneous overloads will blur "
              "replication effects";
    }
    init_state(profile);
  }

  SimMetrics run() {
    const double horizon = opts_.horizon;
    double next_snapshot =
        opts_.snapshot_every > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();

    next_arrival_ = rng_.exponential(total_rate_);
    while (true) {
      bool departure_next =
          !departures_.empty() && departures_.top().first <= next_arrival_;
      double ev_time = departure_next ? departures_.top().first : next_arrival_;
      if (ev_time > horizon) break;
      while (next_snapshot <= ev_time && next_snapshot <= horizon) {
        take_snapshot(next_snapshot);
        next_snapshot += opts_.snapshot_every;
      }
      now_ = ev_time;
      if (departure_next) {
        auto [t, server] = departures_.top();
        departures_.pop();
        handle_departure(static_cast<std::size_t>(server));
      } else {
        handle_arrival();
      }
      ++events_;
      if (opts_.debug_checks && events_ % 10000 == 0) audit_state();
    }
    while (next_snapshot <= horizon) {
      take_snapshot(next_snapshot);
      next_snapshot += opts_.snapshot_every;
    }
    return finalize();
  }

 private:
  struct Entry {
    std::uint32_t server;
    std::uint32_t slot;  // slot index within the server
  };

  // ---- construction ----

  void init_state(const ReplicationProfile& profile) {
    const std::size_t n = params_.n, m = params_.m, d = params_.d;
    CacheAssignment assignment = build_cache_assignment(profile, params_, rng_);

    replicas_.assign(n, {});
    z_.assign(n, 0);
    d_cur_.assign(n, 0);
    slot_pos_.assign(m * d, 0);
    slot_owner_ = std::move(assignment.slot_content);
    busy_.assign(m, 0);
    serving_.assign(m, 0);
    in_service_.assign(n, 0);

    for (std::size_t c = 0; c < n; ++c) {
      replicas_[c].reserve(static_cast<std::size_t>(profile.replicas[c]) + 4);
    }
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t c = slot_owner_[s * d + j];
        slot_pos_[s * d + j] = static_cast<std::uint32_t>(replicas_[c].size());
        replicas_[c].push_back(
            {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(j)});
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      d_cur_[c] = static_cast<long>(replicas_[c].size());
      z_[c] = d_cur_[c];  // everything idle at t = 0
    }

    arrivals_.assign(n, 0);
    losses_.assign(n, 0);
    virtuals_.assign(n, 0);
    evictions_.assign(n, 0);
    z_hist_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      z_hist_[c].assign(static_cast<std::size_t>(d_cur_[c]) + 1, 0.0);
    }
    replica_integral_.assign(n, 0.0);
    last_touch_.assign(n, 0.0);

    avail_pos_.assign(n, -1);
    for (std::size_t c = 0; c < n; ++c) {
      if (z_[c] > 0) {
        avail_pos_[c] = static_cast<long>(avail_.size());
        avail_.push_back(c);
      }
    }

    if (opts_.adaptive) {
      lrl_ = std::make_unique<LrlList>(n);
      lfl_ = std::make_unique<LflEstimator>(n, opts_.lfl_tau);
    }
    if (opts_.virtual_losses) {
      tracked_.assign(n, 0);
      reselect_tracked();
    }
  }

  // ---- time-weighted statistics ----

  // Must be called before Z or the replica count of c changes.
  void touch_content(std::size_t c) {
    double from = std::max(last_touch_[c], opts_.warmup);
    if (now_ > from) {
      double dt = now_ - from;
      auto zi = static_cast<std::size_t>(z_[c]);
      if (zi >= z_hist_[c].size()) z_hist_[c].resize(zi + 1, 0.0);
      z_hist_[c][zi] += dt;
      replica_integral_[c] += static_cast<double>(d_cur_[c]) * dt;
    }
    last_touch_[c] = now_;
  }

  void touch_busy() {
    double from = std::max(busy_last_, opts_.warmup);
    if (now_ > from) {
      busy_integral_ += static_cast<double>(busy_count_) * (now_ - from);
    }
    busy_last_ = now_;
  }

  // ---- availability bookkeeping ----

  void set_avail(std::size_t c, bool avail) {
    if (avail && avail_pos_[c] < 0) {
      avail_pos_[c] = static_cast<long>(avail_.size());
      avail_.push_back(c);
    } else if (!avail && avail_pos_[c] >= 0) {
      auto pos = static_cast<std::size_t>(avail_pos_[c]);
      std::size_t moved = avail_.back();
      avail_[pos] = moved;
      avail_pos_[moved] = static_cast<long>(pos);
      avail_.pop_back();
      avail_pos_[c] = -1;
    }
  }

  void swap_entries(std::size_t c, std::size_t a, std::size_t b) {
    if (a == b) return;
    Entry ea = replicas_[c][a], eb = replicas_[c][b];
    replicas_[c][a] = eb;
    replicas_[c][b] = ea;
    slot_pos_[ea.server * params_.d + ea.slot] = static_cast<std::uint32_t>(b);
    slot_pos_[eb.server * params_.d + eb.slot] = static_cast<std::uint32_t>(a);
  }

  // Replica of c at list position p became busy: move out of the idle prefix.
  void mark_replica_busy(std::size_t c, std::size_t p) {
    touch_content(c);
    auto last_idle = static_cast<std::size_t>(z_[c] - 1);
    swap_entries(c, p, last_idle);
    z_[c] -= 1;
    if (z_[c] == 0) set_avail(c, false);
  }

  // Replica of c at list position p became idle: move into the idle prefix.
  void mark_replica_idle(std::size_t c, std::size_t p) {
    touch_content(c);
    auto first_busy = static_cast<std::size_t>(z_[c]);
    swap_entries(c, p, first_busy);
    z_[c] += 1;
    if (z_[c] == 1) set_avail(c, true);
  }

  // ---- event handlers ----

  void handle_arrival() {
    std::size_t c = alias_.sample(rng_);
    bool counted = now_ > opts_.warmup;
    if (counted) ++arrivals_[c];

    long z_pre = z_[c];
    if (z_pre > 0) {
      std::size_t pick = rng_.index_below(static_cast<std::size_t>(z_pre));
      Entry e = replicas_[c][pick];
      std::size_t s = e.server;
      // The chosen server leaves the idle sets of everything it stores.
      touch_busy();
      for (std::size_t j = 0; j < params_.d; ++j) {
        std::size_t cc = slot_owner_[s * params_.d + j];
        mark_replica_busy(cc, slot_pos_[s * params_.d + j]);
      }
      busy_[s] = 1;
      serving_[s] = c;
      busy_count_ += 1;
      in_service_[c] += 1;
      departures_.emplace(now_ + rng_.exponential(1.0), s);
    } else {
      if (counted) ++losses_[c];
      if (opts_.adaptive) adaptive_loss(c, /*real=*/true, counted);
    }

    if (opts_.virtual_losses && z_pre > 0) {
      OnlineEstimates est = current_estimates();
      double p = virtual_probability(c, z_pre, est);
      bool hit = rng_.coin(p);  // draw always consumed for trace alignment
      if (hit) {
        if (counted) ++virtuals_[c];
        if (opts_.adaptive) adaptive_loss(c, /*real=*/false, counted);
      }
    }

    next_arrival_ = now_ + rng_.exponential(total_rate_);
  }

  void handle_departure(std::size_t s) {
    if (!busy_[s]) throw std::logic_error("departure for idle server");
    std::size_t c = serving_[s];
    touch_busy();
    busy_[s] = 0;
    busy_count_ -= 1;
    in_service_[c] -= 1;
    for (std::size_t j = 0; j < params_.d; ++j) {
      std::size_t cc = slot_owner_[s * params_.d + j];
      mark_replica_idle(cc, slot_pos_[s * params_.d + j]);
    }
    if (opts_.virtual_losses && tracked_[c]) refresh_min_z_star();
  }

  // ---- adaptive replication ----

  void adaptive_loss(std::size_t c, bool real, bool counted) {
    if (lrl_) lrl_->touch(c);
    if (lfl_) lfl_->record_loss(c, now_);

    for (int attempt = 0; attempt < 20; ++attempt) {
      long victim = pick_victim(c);
      if (victim < 0) break;  // nothing available at all
      auto v = static_cast<std::size_t>(victim);
      std::size_t pick = rng_.index_below(static_cast<std::size_t>(z_[v]));
      Entry e = replicas_[v][pick];
      if (server_stores(e.server, c)) {
        note_failed_victim(v);
        continue;  // that server already holds c; try another victim
      }
      execute_swap(c, v, e, real, counted);
      clear_failed_victims();
      return;
    }
    clear_failed_victims();
    if (counted) ++skipped_creations_;
  }

  bool server_stores(std::size_t s, std::size_t c) const {
    for (std::size_t j = 0; j < params_.d; ++j) {
      if (slot_owner_[s * params_.d + j] == c) return true;
    }
    return false;
  }

  void note_failed_victim(std::size_t v) { failed_victims_.push_back(v); }
  void clear_failed_victims() { failed_victims_.clear(); }
  bool victim_failed(std::size_t v) const {
    for (std::size_t f : failed_victims_) {
      if (f == v) return true;
    }
    return false;
  }

  // Victim content with Z > 0, != c, by the configured rule. RANDOM
  // resamples uniformly (so a conflicted victim can recur); ordered rules
  // walk past victims that already failed this event. Returns -1 if no
  // eligible content exists.
  long pick_victim(std::size_t c) {
    switch (opts_.rule) {
      case EvictionRule::kRandom: {
        if (avail_.empty()) return -1;
        if (avail_.size() == 1 && avail_[0] == c) return -1;
        for (int tries = 0; tries < 64; ++tries) {
          std::size_t v = avail_[rng_.index_below(avail_.size())];
          if (v != c) return static_cast<long>(v);
        }
        return -1;
      }
      case EvictionRule::kLrl: {
        for (long i = lrl_->head(); i >= 0;
             i = lrl_->next_of(static_cast<std::size_t>(i))) {
          auto v = static_cast<std::size_t>(i);
          if (v == c || z_[v] <= 0 || victim_failed(v)) continue;
          return i;
        }
        return -1;
      }
      case EvictionRule::kLfl: {
        long best = -1;
        double best_val = 0.0;
        for (std::size_t v = 0; v < params_.n; ++v) {
          if (v == c || z_[v] <= 0 || victim_failed(v)) continue;
          double val = lfl_->raw(v);
          if (best < 0 || val < best_val) {
            best = static_cast<long>(v);
            best_val = val;
          }
        }
        return best;
      }
    }
    return -1;
  }

  // Replace the idle replica `e` of victim v by a new replica of c.
  void execute_swap(std::size_t c, std::size_t v, Entry e, bool real,
                    bool counted) {
    const std::size_t flat = e.server * params_.d + e.slot;
    // Remove v's replica (it is idle, hence inside the idle prefix).
    touch_content(v);
    std::size_t p = slot_pos_[flat];
    swap_entries(v, p, static_cast<std::size_t>(z_[v] - 1));
    z_[v] -= 1;
    swap_entries(v, static_cast<std::size_t>(z_[v]),
                 replicas_[v].size() - 1);
    replicas_[v].pop_back();
    d_cur_[v] -= 1;
    if (z_[v] == 0) set_avail(v, false);
    if (counted) ++evictions_[v];

    // Insert c's new replica; the server is idle so it is available now.
    touch_content(c);
    replicas_[c].push_back(e);
    slot_owner_[flat] = c;
    slot_pos_[flat] = static_cast<std::uint32_t>(replicas_[c].size() - 1);
    swap_entries(c, replicas_[c].size() - 1, static_cast<std::size_t>(z_[c]));
    z_[c] += 1;
    d_cur_[c] += 1;
    if (z_[c] == 1) set_avail(c, true);
    if (real && counted) ++repair_fetches_;
  }

  // ---- virtual-loss estimation ----

  OnlineEstimates current_estimates() const {
    OnlineEstimates est;
    est.rho_eff = static_cast<double>(busy_count_) / static_cast<double>(params_.m);
    est.theta_eff =
        est.rho_eff < 1.0 ? est.rho_eff / (1.0 - est.rho_eff) : 0.0;
    est.min_z_star = min_z_star_;
    return est;
  }

  // Same value as policy.hpp's virtual_loss_probability but with the
  // q-product evaluated in plain arithmetic (the factors are moderate and
  // the hot path cannot afford log/exp per step).
  double virtual_probability(std::size_t c, long z_pre,
                             const OnlineEstimates& est) const {
    if (!(est.theta_eff > 0.0) || est.min_z_star <= 0.0) return 0.0;
    double lam_hat = static_cast<double>(in_service_[c]);
    double zs = z_star(lam_hat, d_cur_[c], est.theta_eff);
    if (zs <= 0.0 || static_cast<double>(z_pre) > zs) return 0.0;
    double q = 1.0;
    for (long i = 1; i <= z_pre; ++i) {
      q *= (lam_hat + static_cast<double>(i) * est.theta_eff) /
           static_cast<double>(d_cur_[c] - i + 1);
    }
    double p = est.min_z_star / zs * q;
    return p > 1.0 ? 1.0 : p;
  }

  void reselect_tracked() {
    // k smallest (in-service count, id); ties resolved by id makes the
    // selection deterministic.
    const std::size_t n = params_.n;
    std::size_t k = std::min(opts_.track_k, n);
    std::vector<std::pair<long, std::size_t>> order(n);
    for (std::size_t c = 0; c < n; ++c) order[c] = {in_service_[c], c};
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                      order.end());
    std::fill(tracked_.begin(), tracked_.end(), 0);
    tracked_ids_.clear();
    for (std::size_t i = 0; i < k; ++i) {
      tracked_[order[i].second] = 1;
      tracked_ids_.push_back(order[i].second);
    }
    refreshes_since_reselect_ = 0;
    recompute_min_z_star();
  }

  void refresh_min_z_star() {
    if (++refreshes_since_reselect_ >= opts_.track_reselect_every) {
      reselect_tracked();
    } else {
      recompute_min_z_star();
    }
  }

  void recompute_min_z_star() {
    double rho = static_cast<double>(busy_count_) / static_cast<double>(params_.m);
    if (!(rho > 0.0) || rho >= 1.0) {
      min_z_star_ = 0.0;
      return;
    }
    double theta = rho / (1.0 - rho);
    double sum = 0.0;
    for (std::size_t c : tracked_ids_) {
      sum += z_star(static_cast<double>(in_service_[c]), d_cur_[c], theta);
    }
    min_z_star_ = tracked_ids_.empty()
                      ? 0.0
                      : sum / static_cast<double>(tracked_ids_.size());
  }

  // ---- snapshots, audits, wrap-up ----

  void take_snapshot(double t) {
    if (snapshot_times_.empty() || opts_.snapshot_every > 0.0) {
      const std::size_t n = params_.n;
      std::size_t buckets = std::min(opts_.decile_count, n);
      std::vector<double> means(buckets, 0.0);
      std::vector<std::size_t> counts(buckets, 0);
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t g = c * buckets / n;
        means[g] += static_cast<double>(d_cur_[c]);
        counts[g] += 1;
      }
      for (std::size_t g = 0; g < buckets; ++g) {
        means[g] /= static_cast<double>(counts[g]);
      }
      snapshot_times_.push_back(t);
      snapshot_means_.push_back(std::move(means));
    }
  }

  void audit_state() const {
    std::vector<long> z_check(params_.n, 0);
    std::size_t busy_check = 0;
    for (std::size_t s = 0; s < params_.m; ++s) {
      if (busy_[s]) {
        ++busy_check;
        continue;
      }
      for (std::size_t j = 0; j < params_.d; ++j) {
        z_check[slot_owner_[s * params_.d + j]] += 1;
      }
    }
    if (busy_check != busy_count_) throw std::logic_error("busy count drift");
    long long in_service_total = 0;
    for (std::size_t c = 0; c < params_.n; ++c) {
      if (z_check[c] != z_[c]) throw std::logic_error("Z bookkeeping drift");
      in_service_total += in_service_[c];
      bool avail = avail_pos_[c] >= 0;
      if (avail != (z_[c] > 0)) throw std::logic_error("avail set drift");
    }
    if (in_service_total != static_cast<long long>(busy_count_)) {
      throw std::logic_error("in-service count drift");
    }
    for (std::size_t c = 0; c < params_.n; ++c) {
      for (std::size_t p = 0; p < replicas_[c].size(); ++p) {
        Entry e = replicas_[c][p];
        if (slot_owner_[e.server * params_.d + e.slot] != c ||
            slot_pos_[e.server * params_.d + e.slot] != p) {
          throw std::logic_error("backpointer drift");
        }
        bool idle_listed = p < static_cast<std::size_t>(z_[c]);
        if (idle_listed == static_cast<bool>(busy_[e.server])) {
          throw std::logic_error("idle prefix drift");
        }
      }
    }
  }

  SimMetrics finalize() {
    now_ = opts_.horizon;
    touch_busy();
    for (std::size_t c = 0; c < params_.n; ++c) touch_content(c);

    SimMetrics out;
    const std::size_t n = params_.n;
    out.measured_time = opts_.horizon - opts_.warmup;
    out.arrivals = std::move(arrivals_);
    out.losses = std::move(losses_);
    out.virtual_losses = std::move(virtuals_);
    out.evictions = std::move(evictions_);
    out.final_replicas = d_cur_;
    out.z_mean.resize(n);
    out.replicas_mean.resize(n);
    out.z_prob.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      double mass = 0.0, zsum = 0.0;
      for (std::size_t z = 0; z < z_hist_[c].size(); ++z) {
        mass += z_hist_[c][z];
        zsum += static_cast<double>(z) * z_hist_[c][z];
      }
      out.z_mean[c] = mass > 0.0 ? zsum / mass : 0.0;
      out.replicas_mean[c] = replica_integral_[c] / out.measured_time;
      out.z_prob[c] = std::move(z_hist_[c]);
      if (mass > 0.0) {
        for (double& v : out.z_prob[c]) v /= mass;
      }
      out.total_arrivals += out.arrivals[c];
      out.total_losses += out.losses[c];
    }
    out.busy_fraction =
        busy_integral_ / (out.measured_time * static_cast<double>(params_.m));
    out.inefficiency =
        out.total_arrivals > 0
            ? static_cast<double>(out.total_losses) /
                  static_cast<double>(out.total_arrivals)
            : 0.0;
    out.events_processed = events_;
    out.repair_fetches = repair_fetches_;
    out.skipped_creations = skipped_creations_;
    out.snapshot_times = std::move(snapshot_times_);
    out.snapshot_decile_means = std::move(snapshot_means_);
    if (!warn_.empty()) out.warnings.push_back(warn_);
    return out;
  }

  // ---- members ----

  SystemParams params_;
  SimOptions opts_;
  std::vector<double> lambda_;
  Rng rng_;
  AliasTable alias_;
  double total_rate_;

  double now_ = 0.0;
  double next_arrival_ = 0.0;
  std::priority_queue<std::pair<double, std::uint32_t>,
                      std::vector<std::pair<double, std::uint32_t>>,
                      std::greater<>>
      departures_;

  std::vector<std::vector<Entry>> replicas_;  // idle-first partition
  std::vector<long> z_;                       // idle prefix lengths
  std::vector<long> d_cur_;                   // current replica counts
  std::vector<std::size_t> slot_owner_;       // (server, slot) -> content
  std::vector<std::uint32_t> slot_pos_;       // (server, slot) -> list index
  std::vector<std::uint8_t> busy_;
  std::vector<std::size_t> serving_;
  std::vector<long> in_service_;  // per-content busy servers (lambda-hat)
  std::size_t busy_count_ = 0;

  std::vector<std::size_t> avail_;  // contents with Z > 0
  std::vector<long> avail_pos_;

  std::unique_ptr<LrlList> lrl_;
  std::unique_ptr<LflEstimator> lfl_;
  std::vector<std::size_t> failed_victims_;

  std::vector<std::uint8_t> tracked_;
  std::vector<std::size_t> tracked_ids_;
  std::size_t refreshes_since_reselect_ = 0;
  double min_z_star_ = 0.0;

  std::vector<std::uint64_t> arrivals_, losses_, virtuals_, evictions_;
  std::vector<std::vector<double>> z_hist_;
  std::vector<double> replica_integral_;
  std::vector<double> last_touch_;
  double busy_integral_ = 0.0;
  double busy_last_ = 0.0;
  std::uint64_t events_ = 0;
  std::uint64_t repair_fetches_ = 0;
  std::uint64_t skipped_creations_ = 0;
  std::string warn_;

  std::vector<double> snapshot_times_;
  std::vector<std::vector<double>> snapshot_means_;
};

// Convenience wrapper.
inline SimMetrics simulate(const Catalog& catalog,
                           const ReplicationProfile& profile,
                           const SystemParams& params, const SimOptions& opts,
                           std::uint64_t seed) {
  return Simulator(catalog, profile, params, opts, seed).run();
}

}  // namespace lossnet
