#pragma once

// Small numeric helpers shared by the analytical modules.

#include <cmath>
#include <stdexcept>

namespace lossnet {

inline constexpr double kEulerGamma = 0.5772156649015329;

// Floor applied to probabilities before taking logs.
inline constexpr double kLogFloor = 1e-300;

inline double log_gamma(double x) { return std::lgamma(x); }

// Generalized binomial coefficient binom(k + x, l) understood as the product
// (1/l!) * prod_{i = k-l+1..k} (i + x), evaluated in log space.
// Requires l <= k so every product index stays positive.
inline double extended_binomial(int k, double x, int l) {
  if (k < 0 || l < 0 || x < 0.0) {
    throw std::invalid_argument("extended_binomial: negative argument");
  }
  if (l > k) throw std::invalid_argument("extended_binomial: l > k");
  if (l == 0) return 1.0;
  double lg = -log_gamma(static_cast<double>(l) + 1.0);
  for (int i = k - l + 1; i <= k; ++i) {
    lg += std::log(static_cast<double>(i) + x);
  }
  return std::exp(lg);
}

}  // namespace lossnet
