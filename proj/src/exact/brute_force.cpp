#include "exlab/exact/brute_force.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exlab/errors.hpp"

namespace exlab::exact {

namespace {

constexpr int kMaxVertices = 6;

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

std::uint64_t factorial_u64(int x) {
  std::uint64_t out = 1;
  for (int i = 2; i <= x; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

// Component labels plus per-label excess; small enough to copy at every node.
struct TinyForest {
  std::array<std::int8_t, kMaxVertices> label{};
  std::array<std::int8_t, kMaxVertices> excess{};

  explicit TinyForest(int n) {
    for (int v = 0; v < n; ++v) {
      label[v] = static_cast<std::int8_t>(v);
      excess[v] = -1;
    }
  }

  /// Adds edge (u, v); returns the prior excess if the edge was internal.
  std::optional<int> add(int n, int u, int v) {
    const int a = label[u], b = label[v];
    if (a == b) return excess[a]++;
    excess[a] = static_cast<std::int8_t>(excess[a] + excess[b] + 1);
    for (int w = 0; w < n; ++w)
      if (label[w] == b) label[w] = static_cast<std::int8_t>(a);
    return std::nullopt;
  }
};

struct PermutationWalk {
  int n;
  int l;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> leaves_below;  // (N - depth - 1)!
  std::uint64_t weighted_transitions = 0;

  void visit(const TinyForest& forest, std::uint32_t used, int depth) {
    const int total = static_cast<int>(edges.size());
    for (int e = 0; e < total; ++e) {
      if (used & (1u << e)) continue;
      TinyForest next = forest;
      const auto prior = next.add(n, edges[e].first, edges[e].second);
      if (prior && *prior == l) weighted_transitions += leaves_below[depth];
      if (depth + 1 < total) visit(next, used | (1u << e), depth + 1);
    }
  }
};

void check_domain(int n, int max_n) {
  if (n < 1) throw DomainError("brute force requires n >= 1");
  if (n > max_n) throw ResourceError("brute force enumeration limited to n <= " +
                                     std::to_string(max_n));
}

}  // namespace

ExactRational brute_force_alpha_permutations(int n, int l) {
  check_domain(n, 5);
  PermutationWalk walk{n, l, complete_graph_edges(n), {}, 0};
  const int total = static_cast<int>(walk.edges.size());
  if (total == 0) return ExactRational(0);
  for (int d = 0; d < total; ++d) walk.leaves_below.push_back(factorial_u64(total - d - 1));
  walk.visit(TinyForest(n), 0u, 0);
  ExactRational out(Count(static_cast<unsigned long>(walk.weighted_transitions)),
                    Count(static_cast<unsigned long>(factorial_u64(total))));
  out.canonicalize();
  return out;
}

ExactRational brute_force_alpha_subsets(int n, int l) {
  check_domain(n, kMaxVertices);
  const auto edges = complete_graph_edges(n);
  const int total = static_cast<int>(edges.size());
  if (total == 0) return ExactRational(0);

  std::vector<Count> weight(total);  // |S|! (N-|S|-1)!
  for (int s = 0; s < total; ++s) {
    weight[s] = Count(static_cast<unsigned long>(factorial_u64(s))) *
                Count(static_cast<unsigned long>(factorial_u64(total - s - 1)));
  }

  Count numerator = 0;
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> edge_count{};
  std::array<int, kMaxVertices> order{};
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    std::iota(parent.begin(), parent.begin() + n, 0);
    edge_count.fill(0);
    order.fill(0);
    for (int e = 0; e < total; ++e) {
      if (!(mask & (1u << e))) continue;
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) parent[b] = a;
    }
    for (int e = 0; e < total; ++e)
      if (mask & (1u << e)) ++edge_count[find(edges[e].first)];
    for (int v = 0; v < n; ++v) ++order[find(v)];

    long hits = 0;
    for (int e = 0; e < total; ++e) {
      if (mask & (1u << e)) continue;
      const int a = find(edges[e].first);
      if (a == find(edges[e].second) && edge_count[a] - order[a] == l) ++hits;
    }
    if (hits != 0) numerator += weight[std::popcount(mask)] * hits;
  }
  ExactRational out(numerator, Count(static_cast<unsigned long>(factorial_u64(total))));
  out.canonicalize();
  return out;
}

ExactRational brute_force_alpha(int n, int l) {
  check_domain(n, kMaxVertices);
  return n <= 5 ? brute_force_alpha_permutations(n, l) : brute_force_alpha_subsets(n, l);
}

}  // namespace exlab::exact
