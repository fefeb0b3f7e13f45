#include "exlab/sim/forest.hpp"

#include <numeric>
#include <utility>

#include "exlab/errors.hpp"

namespace exlab::sim {

ComponentForest::ComponentForest(Vertex n)
    : parent_(n), size_(n, 1), excess_(n, -1), edges_(n, 0), components_(n) {
  if (n < 1) throw DomainError("forest requires n >= 1");
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex ComponentForest::find(Vertex v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

Vertex ComponentForest::find_root(Vertex v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

Event ComponentForest::add_edge(Vertex u, Vertex v) {
  Vertex ru = find(u);
  Vertex rv = find(v);
  if (ru == rv) {
    const std::int64_t before = excess_[ru];
    ++excess_[ru];
    ++edges_[ru];
    return {Event::Kind::kInternal, ru, before, 0, excess_[ru], size_[ru], 0, size_[ru]};
  }
  Event ev{Event::Kind::kMerge, 0, excess_[ru], excess_[rv], excess_[ru] + excess_[rv] + 1,
           size_[ru], size_[rv], size_[ru] + size_[rv]};
  if (size_[ru] < size_[rv]) std::swap(ru, rv);
  parent_[rv] = ru;
  size_[ru] += size_[rv];
  excess_[ru] = ev.excess_new;
  edges_[ru] += edges_[rv] + 1;
  --components_;
  ev.root = ru;
  return ev;
}

bool ComponentForest::check_invariants() const {
  std::uint64_t total = 0;
  Vertex roots = 0;
  for (Vertex v = 0; v < order(); ++v) {
    if (parent_[v] != v) continue;
    ++roots;
    total += size_[v];
    if (excess_[v] != edges_[v] - static_cast<std::int64_t>(size_[v])) return false;
  }
  return total == order() && roots == components_;
}

}  // namespace exlab::sim
