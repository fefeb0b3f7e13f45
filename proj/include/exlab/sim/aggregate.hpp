#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "exlab/sim/run.hpp"

namespace exlab::sim {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of replica i: mix64(base_seed ^ (0x9E3779B97F4A7C15 * i)).
std::uint64_t replica_seed(std::uint64_t base_seed, std::uint64_t i);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // sample variance, 0 for a single replica
  double stderr_ = 0.0;   // √(variance / replicas)
};

struct AggregateStats {
  Vertex n = 1;
  std::uint64_t base_seed = 0;
  std::int64_t replicas = 0;
  std::map<long, Moments> transitions;
  std::map<long, Moments> V;
  std::map<long, Moments> V_max;
  /// Per-run count of transitions out of excess l at component order k,
  /// as a distribution over replicas.
  std::map<long, std::map<std::uint64_t, Moments>> transition_orders;
  Moments edges_processed;
};

struct AggregateConfig {
  Vertex n = 1;
  std::uint64_t base_seed = 0;
  std::int64_t replicas = 1;
  std::set<long> tracked;
  std::optional<long> l_stop;  // default: max(tracked), or -1 if empty
  unsigned threads = 0;        // 0: hardware concurrency
  std::optional<StreamMode> mode;
  bool lazy_dedupe = true;
};

/// Runs the replicas on worker threads and reduces them with exact integer
/// sums, so the output depends only on (n, base_seed, replicas, tracked, l_stop).
AggregateStats aggregate(const AggregateConfig& cfg);

}  // namespace exlab::sim
