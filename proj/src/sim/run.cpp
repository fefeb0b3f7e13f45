#include "exlab/sim/run.hpp"

#include <algorithm>

#include "exlab/errors.hpp"

namespace exlab::sim {

const RunConfig& validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw DomainError("simulation requires n >= 1");
  if (cfg.l_stop < -1) throw DomainError("l_stop must be >= -1");
  for (const long l : cfg.tracked) {
    if (l < -1) throw DomainError("tracked excess values must be >= -1");
    if (l > cfg.l_stop) throw DomainError("l_stop is below a tracked excess value");
  }
  return cfg;
}

RunState::RunState(const RunConfig& cfg)
    : cfg_(validate(cfg)),
      forest_(cfg_.n),
      stream_(cfg_.n, cfg_.seed, cfg_.mode.value_or(EdgeStream::default_mode(cfg_.n))),
      tracked_(static_cast<std::size_t>(cfg_.l_stop + 2), false) {
  for (const long l : cfg_.tracked) {
    tracked_[static_cast<std::size_t>(l + 1)] = true;
    stats_.transitions[l] = 0;
    stats_.transition_orders[l];
    stats_.V[l] = 0;
    stats_.V_max[l] = 0;
  }
  if (is_tracked(-1)) {
    stats_.V[-1] = cfg_.n;
    stats_.V_max[-1] = 1;
  }
}

std::optional<Edge> RunState::draw() {
  if (stream_.mode() == StreamMode::kFullShuffle || !cfg_.lazy_dedupe) return stream_.next();
  const std::int64_t live_limit = cfg_.l_stop;
  const bool strict = settled();
  for (;;) {
    if (stream_.emitted() >= stream_.total_edges()) return std::nullopt;
    const Edge e = stream_.draw_pair();
    const Vertex ru = forest_.find(e.u);
    const Vertex rv = forest_.find(e.v);
    if (ru != rv) {
      // Never seen: both endpoints would already share a component.
      if (strict || forest_.excess_of(ru) + forest_.excess_of(rv) + 1 <= live_limit) stream_.mark_seen(e);
      return e;
    }
    if (!strict && forest_.excess_of(ru) > live_limit) {
      ++absorbed_;
      continue;
    }
    if (stream_.mark_seen(e)) return e;
  }
}

std::optional<Event> RunState::step() {
  if (exhausted_) return std::nullopt;
  const std::optional<Edge> e = draw();
  if (!e) {
    exhausted_ = true;
    return std::nullopt;
  }
  const Event ev = forest_.add_edge(e->u, e->v);
  ++stats_.edges_processed;
  record(ev);
  return ev;
}

void RunState::record(const Event& ev) {
  const auto size_new = static_cast<std::int64_t>(ev.size_new);
  std::int64_t gained = 0;
  if (ev.kind == Event::Kind::kInternal) {
    if (is_tracked(ev.excess_a)) {
      ++stats_.transitions[ev.excess_a];
      ++stats_.transition_orders[ev.excess_a][ev.size_new];
    }
    gained = size_new;
  } else {
    if (ev.excess_a != ev.excess_new) gained += static_cast<std::int64_t>(ev.size_a);
    if (ev.excess_b != ev.excess_new) gained += static_cast<std::int64_t>(ev.size_b);
  }
  if (is_tracked(ev.excess_new)) {
    stats_.V[ev.excess_new] += gained;
    auto& vmax = stats_.V_max[ev.excess_new];
    vmax = std::max(vmax, size_new);
  }
}

bool RunState::settled() const {
  if (forest_.component_count() != 1) return false;
  return forest_.excess_of(forest_.find_root(0)) > cfg_.l_stop;
}

RunStats RunState::run_to_completion() {
  while (!settled() && step()) {
  }
  return stats_;
}

RunStats run_to_completion(RunState& state) { return state.run_to_completion(); }

}  // namespace exlab::sim
