#include "exlab/sim/edge_stream.hpp"

#include <utility>

#include "exlab/errors.hpp"

namespace exlab::sim {

namespace {
constexpr std::uint64_t kFullShuffleLimit = 10'000'000;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

StreamMode EdgeStream::default_mode(Vertex n) {
  const std::uint64_t total = std::uint64_t{n} * (n - (n > 0 ? 1 : 0)) / 2;
  return total <= kFullShuffleLimit ? StreamMode::kFullShuffle : StreamMode::kRejection;
}

EdgeStream::EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode)
    : n_(n), mode_(mode), total_(std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2), rng_(seed) {
  if (n < 1) throw DomainError("edge stream requires n >= 1");
  if (mode_ == StreamMode::kFullShuffle) {
    pool_.reserve(total_);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pool_.push_back(key({u, v}));
  }
}

std::optional<Edge> EdgeStream::next() {
  if (emitted_ >= total_) return std::nullopt;
  if (mode_ == StreamMode::kFullShuffle) {
    const std::uint64_t j = emitted_ + bounded(rng_, total_ - emitted_);
    std::swap(pool_[emitted_], pool_[j]);
    const std::uint64_t packed = pool_[emitted_++];
    return Edge{static_cast<Vertex>(packed >> 32), static_cast<Vertex>(packed & 0xffffffffu)};
  }
  for (;;) {
    const Edge e = draw_pair();
    if (mark_seen(e)) return e;
  }
}

Edge EdgeStream::draw_pair() {
  if (n_ < 2) throw DomainError("no vertex pairs on fewer than two vertices");
  auto u = static_cast<Vertex>(bounded(rng_, n_));
  auto v = static_cast<Vertex>(bounded(rng_, n_ - 1));
  if (v >= u) ++v;
  if (u > v) std::swap(u, v);
  return {u, v};
}

bool EdgeStream::mark_seen(Edge e) {
  const bool fresh = seen_.insert(key(e)).second;
  if (fresh) ++emitted_;
  return fresh;
}

bool EdgeStream::seen(Edge e) const { return seen_.contains(key(e)); }

}  // namespace exlab::sim
