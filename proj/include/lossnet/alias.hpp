#pragma once

// Vose alias table: O(1) sampling from a fixed discrete distribution.
// Used to pick which content an arrival belongs to out of the aggregate
// Poisson stream.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lossnet/rng.hpp"

namespace lossnet {

class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw std::invalid_argument("alias table needs >= 1 weight");
    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("negative weight");
      total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("all weights zero");

    // Scaled weights; exact processing order is fixed (ascending index) so
    // the table layout, and hence the sample stream, is deterministic.
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * n / total;
    std::vector<std::size_t> small, large;
    small.reserve(n);
    large.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      std::size_t s = small.back();
      small.pop_back();
      std::size_t l = large.back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    while (!large.empty()) {
      prob_[large.back()] = 1.0;
      large.pop_back();
    }
    while (!small.empty()) {  // numerical leftovers
      prob_[small.back()] = 1.0;
      small.pop_back();
    }
  }

  // One u01 draw serves both the bucket pick and the coin.
  std::size_t sample(Rng& rng) const {
    double u = rng.u01() * static_cast<double>(prob_.size());
    auto i = static_cast<std::size_t>(u);
    if (i >= prob_.size()) i = prob_.size() - 1;
    double frac = u - static_cast<double>(i);
    return frac < prob_[i] ? i : alias_[i];
  }

  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace lossnet
