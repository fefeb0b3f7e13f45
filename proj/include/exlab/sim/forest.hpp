#pragma once

#include <cstdint>
#include <vector>

#include "exlab/sim/edge_stream.hpp"

namespace exlab::sim {

/// What adding one edge did to the component structure.
struct Event {
  enum class Kind { kMerge, kInternal };
  Kind kind;
  Vertex root;                 // root of the resulting component
  std::int64_t excess_a;       // merge: first side; internal: excess before the edge
  std::int64_t excess_b;       // merge: second side; internal: unused (0)
  std::int64_t excess_new;
  std::uint64_t size_a;        // merge: first side; internal: component order
  std::uint64_t size_b;        // merge: second side; internal: 0
  std::uint64_t size_new;
};

/// Union-find over the vertices of the evolving graph, with order, excess and
/// edge count kept at roots. Union by size, path halving.
class ComponentForest {
 public:
  explicit ComponentForest(Vertex n);

  Vertex order() const { return static_cast<Vertex>(parent_.size()); }
  Vertex component_count() const { return components_; }

  Vertex find(Vertex v);
  /// Root lookup without path compression.
  Vertex find_root(Vertex v) const;

  std::uint64_t size_of(Vertex root) const { return size_[root]; }
  std::int64_t excess_of(Vertex root) const { return excess_[root]; }
  std::int64_t edges_of(Vertex root) const { return edges_[root]; }

  Event add_edge(Vertex u, Vertex v);

  /// Sizes sum to n, excess equals edges minus order at every root, and the
  /// number of roots equals component_count().
  bool check_invariants() const;

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint64_t> size_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> edges_;
  Vertex components_;
};

}  // namespace exlab::sim
