#pragma once

// Random bipartite cache graph: m servers with d slots each, content c
// appearing in exactly D_c distinct servers. Built by the configuration
// model (uniform random pairing of slot stubs with content stubs), followed
// by random edge swaps to repair duplicate (server, content) pairs into a
// simple graph.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lossnet/model.hpp"
#include "lossnet/replication.hpp"
#include "lossnet/rng.hpp"

namespace lossnet {

struct CacheAssignment {
  // slot_content[s*d + j] = content stored in slot j of server s.
  std::vector<std::size_t> slot_content;
  std::size_t swap_attempts = 0;
};

inline CacheAssignment build_cache_assignment(const ReplicationProfile& profile,
                                              const SystemParams& params,
                                              Rng& rng) {
  profile.validate(params);
  const std::size_t m = params.m, d = params.d;
  const std::size_t slots = m * d;

  CacheAssignment out;
  out.slot_content.resize(slots);
  std::size_t pos = 0;
  for (std::size_t c = 0; c < profile.size(); ++c) {
    for (long k = 0; k < profile.replicas[c]; ++k) {
      out.slot_content[pos++] = c;
    }
  }
  if (pos != slots) throw std::logic_error("stub count mismatch");

  // Uniform pairing: shuffle the content stubs over the slot sequence.
  for (std::size_t i = slots - 1; i > 0; --i) {
    std::size_t j = rng.index_below(i + 1);
    std::swap(out.slot_content[i], out.slot_content[j]);
  }

  // Count duplicates per (server, content).
  auto server_of = [d](std::size_t slot) { return slot / d; };
  auto has_conflict = [&](std::size_t slot, std::size_t content) {
    std::size_t s = server_of(slot);
    for (std::size_t j = s * d; j < (s + 1) * d; ++j) {
      if (j != slot && out.slot_content[j] == content) return true;
    }
    return false;
  };

  std::vector<std::size_t> bad;
  for (std::size_t s = 0; s < m; ++s) {
    // Mark all but the first occurrence of each duplicated content.
    for (std::size_t j = s * d; j < (s + 1) * d; ++j) {
      for (std::size_t k = s * d; k < j; ++k) {
        if (out.slot_content[k] == out.slot_content[j]) {
          bad.push_back(j);
          break;
        }
      }
    }
  }

  // Repair: swap each conflicting slot with a random partner such that
  // neither endpoint ends up duplicated. Bounded to keep termination
  // guaranteed even for adversarial degree sequences.
  const std::size_t max_attempts = 100 * slots;
  while (!bad.empty()) {
    std::size_t slot = bad.back();
    std::size_t content = out.slot_content[slot];
    bool fixed = false;
    while (out.swap_attempts < max_attempts) {
      ++out.swap_attempts;
      std::size_t other = rng.index_below(slots);
      std::size_t other_content = out.slot_content[other];
      if (server_of(other) == server_of(slot)) continue;
      if (other_content == content) continue;
      if (has_conflict(slot, other_content)) continue;
      if (has_conflict(other, content)) continue;
      out.slot_content[slot] = other_content;
      out.slot_content[other] = content;
      fixed = true;
      break;
    }
    if (!fixed) {
      throw std::runtime_error(
          "cache graph repair failed: degree sequence too constrained");
    }
    bad.pop_back();
    // The swap may itself have been a `bad` slot's partner; re-validate the
    // remaining entries lazily (cheap: conflicts only shrink).
    while (!bad.empty() &&
           !has_conflict(bad.back(), out.slot_content[bad.back()])) {
      bad.pop_back();
    }
  }
  return out;
}

}  // namespace lossnet
