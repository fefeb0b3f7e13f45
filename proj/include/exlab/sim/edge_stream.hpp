#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <absl/container/flat_hash_set.h>

namespace exlab::sim {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Uniform integer in [0, range) by multiply-and-reject; identical on every
/// platform for a given engine state, unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range);

enum class StreamMode { kFullShuffle, kRejection };

/// Edges of K_n in uniformly random order.
///
/// kFullShuffle materializes all C(n,2) edges and runs Fisher-Yates lazily, one
/// swap per emitted edge. kRejection draws uniform vertex pairs and rejects
/// repeats against a hash set, which only pays off when a short prefix of the
/// order is consumed. Both emit a uniformly distributed prefix of a uniform
/// random permutation.
class EdgeStream {
 public:
  EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode);

  /// kFullShuffle when C(n,2) <= 10^7, else kRejection.
  static StreamMode default_mode(Vertex n);

  Vertex order() const { return n_; }
  StreamMode mode() const { return mode_; }
  std::uint64_t total_edges() const { return total_; }
  /// Distinct edges handed out so far through next() or mark_seen().
  std::uint64_t emitted() const { return emitted_; }

  /// Next edge of the permutation; nullopt once all edges are out.
  std::optional<Edge> next();

  // Rejection-mode primitives, for callers that only need repeats filtered
  // inside part of the graph.

  /// Uniform unordered pair of distinct vertices, drawn with replacement.
  Edge draw_pair();
  /// Records e; false if it had already been recorded.
  bool mark_seen(Edge e);
  bool seen(Edge e) const;

 private:
  static std::uint64_t key(Edge e) { return (std::uint64_t{e.u} << 32) | e.v; }

  Vertex n_;
  StreamMode mode_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::mt19937_64 rng_;
  std::vector<std::uint64_t> pool_;  // kFullShuffle: packed edges, prefix already emitted
  absl::flat_hash_set<std::uint64_t> seen_;
};

}  // namespace exlab::sim
