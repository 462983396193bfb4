#pragma once

// Core domain types: system sizing parameters and content popularity
// catalogs.
//
// Model recap: m edge servers, each with d cache slots; n contents; requests
// for content c arrive Poisson(lambda_c) and hold one server for an
// exponential(1) service time; a request finding no idle replica is lost to
// the data center. rho = n*lambda_bar/m is the offered load per server.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lossnet {

struct SystemParams {
  std::size_t n = 0;  // contents
  std::size_t m = 0;  // servers
  std::size_t d = 0;  // cache slots per server
  double rho = 0.0;   // offered load, = n*lambda_bar/m
  double lambda_bar = 0.0;

  static SystemParams from_rho(std::size_t n, std::size_t m, std::size_t d,
                               double rho) {
    SystemParams p{n, m, d, rho, rho * static_cast<double>(m) /
                                     static_cast<double>(n)};
    p.validate();
    return p;
  }

  static SystemParams from_lambda_bar(std::size_t n, std::size_t m,
                                      std::size_t d, double lambda_bar) {
    SystemParams p{n, m, d,
                   static_cast<double>(n) * lambda_bar /
                       static_cast<double>(m),
                   lambda_bar};
    p.validate();
    return p;
  }

  void validate() const {
    if (n < 1 || m < 1 || d < 1) {
      throw std::invalid_argument("system sizes must be >= 1");
    }
    if (d > n) throw std::invalid_argument("d must be <= n");
    if (!(rho > 0.0) || !(rho < 1.0)) {
      throw std::invalid_argument("rho must lie in (0, 1)");
    }
  }

  std::size_t total_slots() const { return m * d; }
};

struct Catalog {
  std::vector<double> lambda;  // per-content arrival rate, rank order

  std::size_t size() const { return lambda.size(); }

  double mean() const {
    return std::accumulate(lambda.begin(), lambda.end(), 0.0) /
           static_cast<double>(lambda.size());
  }

  double total() const {
    return std::accumulate(lambda.begin(), lambda.end(), 0.0);
  }

  void validate(double lambda_bar) const {
    if (lambda.empty()) throw std::invalid_argument("empty catalog");
    for (double l : lambda) {
      if (l < 0.0) throw std::invalid_argument("negative popularity");
    }
    double mu = mean();
    double scale = std::max(std::abs(lambda_bar), 1.0);
    if (std::abs(mu - lambda_bar) > 1e-12 * scale) {
      throw std::invalid_argument("catalog mean != lambda_bar");
    }
  }
};

// Zipf(alpha) popularities: lambda_i proportional to i^(-alpha), scaled so
// the catalog mean equals lambda_bar. Rank 1 is the most popular content.
inline Catalog zipf_catalog(std::size_t n, double alpha, double lambda_bar) {
  if (n < 1) throw std::invalid_argument("zipf_catalog: n >= 1 required");
  if (alpha < 0.0) throw std::invalid_argument("zipf_catalog: alpha >= 0");
  if (!(lambda_bar > 0.0)) {
    throw std::invalid_argument("zipf_catalog: lambda_bar > 0");
  }
  Catalog cat;
  cat.lambda.resize(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cat.lambda[i] = std::pow(static_cast<double>(i + 1), -alpha);
    norm += cat.lambda[i];
  }
  double scale = static_cast<double>(n) * lambda_bar / norm;
  for (double& l : cat.lambda) l *= scale;
  return cat;
}

// A popularity class: `count` contents sharing rate `lambda`; `replicas`
// optionally pins the per-content replica count for explicit profiles.
struct ContentClass {
  std::size_t count = 0;
  double lambda = 0.0;
  long replicas = -1;  // < 0 means "not specified"
};

using ClassSpec = std::vector<ContentClass>;

// Expands a class spec into a flat catalog (class 1 first), with every
// popularity multiplied by `scale`.
inline Catalog class_catalog(const ClassSpec& spec, double scale = 1.0) {
  if (spec.empty()) throw std::invalid_argument("class_catalog: empty spec");
  Catalog cat;
  for (const auto& cls : spec) {
    if (!(cls.lambda > 0.0)) {
      throw std::invalid_argument("class_catalog: lambda_i > 0 required");
    }
    cat.lambda.insert(cat.lambda.end(), cls.count, cls.lambda * scale);
  }
  if (cat.lambda.empty()) {
    throw std::invalid_argument("class_catalog: zero contents");
  }
  return cat;
}

}  // namespace lossnet
