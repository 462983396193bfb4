#pragma once

// Deterministic random number utilities.
//
// All randomness in the project flows through Rng, a thin wrapper around
// std::mt19937_64 (whose output sequence is fixed by the C++ standard) with
// hand-rolled mappings to doubles and bounded integers. std::uniform_*
// distributions are deliberately avoided: their algorithms are
// implementation-defined, and run outputs must be bit-identical across
// toolchains for a given seed.

#include <cmath>
#include <cstdint>
#include <random>

namespace lossnet {

// SplitMix64 step; used to derive well-separated child seeds from a master
// seed (seed 0 is fine: the increment constant breaks it apart).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives the seed for a named sub-stream (e.g. per simulation cell) so that
// distinct (master_seed, stream_index) pairs get unrelated generators.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s ^= stream * 0x9e3779b97f4a7c15ULL;
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits; never returns 1.0.
  double u01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Exponential with the given rate; u < 1 guarantees a finite result.
  double exponential(double rate) {
    return -std::log(1.0 - u01()) / rate;
  }

  // Uniform integer in [0, n). Lemire's multiply-shift with rejection;
  // unbiased and deterministic given the generator state.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    while (true) {
      std::uint64_t x = gen_();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= n) return static_cast<std::uint64_t>(m >> 64);
      std::uint64_t threshold = (0 - n) % n;
      if (lo >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  std::size_t index_below(std::size_t n) {
    return static_cast<std::size_t>(below(static_cast<std::uint64_t>(n)));
  }

  // Bernoulli(p) using one u01 draw (always consumes the draw, so event
  // traces stay aligned whether or not the coin is examined further).
  bool coin(double p) { return u01() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lossnet
