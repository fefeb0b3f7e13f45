#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "exlab/sim/edge_stream.hpp"
#include "exlab/sim/forest.hpp"

namespace exlab::sim {

struct RunConfig {
  Vertex n = 1;
  std::uint64_t seed = 0;
  std::set<long> tracked;  // excess values, each in [-1, l_stop]
  long l_stop = 0;
  std::optional<StreamMode> mode;  // default: EdgeStream::default_mode(n)
  /// In rejection mode, only edges inside components of excess <= l_stop are
  /// recorded for repeat detection, and draws inside the other components are
  /// discarded unrecorded. Such draws cannot change any tracked quantity, so
  /// the statistics keep their exact distribution. Steps taken after the run
  /// has settled filter strictly against the recorded edges only.
  bool lazy_dedupe = true;
};

struct RunStats {
  std::map<long, std::int64_t> transitions;
  std::map<long, std::map<std::uint64_t, std::int64_t>> transition_orders;
  std::map<long, std::int64_t> V;
  std::map<long, std::int64_t> V_max;
  std::int64_t edges_processed = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Throws DomainError unless n >= 1 and every tracked l lies in [-1, l_stop].
const RunConfig& validate(const RunConfig& cfg);

/// One replay of the random graph process.
///
/// Statistics, for each tracked l:
///   transitions[l]        internal edges landing in a component of excess l
///   transition_orders[l]  order of that component, per event
///   V[l]                  vertices whose component has excess exactly l at some time
///   V_max[l]              largest order seen for a component of excess l
class RunState {
 public:
  explicit RunState(const RunConfig& cfg);

  /// Adds the next edge; nullopt once all C(n,2) edges have been processed.
  std::optional<Event> step();

  /// Connected with excess above l_stop: no tracked statistic can change.
  bool settled() const;
  bool exhausted() const { return exhausted_; }
  /// Draws discarded by lazy repeat filtering.
  std::int64_t absorbed_draws() const { return absorbed_; }

  /// Steps until settled() or exhausted().
  RunStats run_to_completion();

  const ComponentForest& forest() const { return forest_; }
  const RunStats& stats() const { return stats_; }
  const RunConfig& config() const { return cfg_; }

 private:
  std::optional<Edge> draw();
  void record(const Event& ev);
  bool is_tracked(std::int64_t e) const {
    return e >= -1 && e <= cfg_.l_stop && tracked_[static_cast<std::size_t>(e + 1)];
  }

  RunConfig cfg_;
  ComponentForest forest_;
  EdgeStream stream_;
  std::vector<bool> tracked_;  // index l + 1
  RunStats stats_;
  bool exhausted_ = false;
  std::int64_t absorbed_ = 0;
};

inline RunState new_run(const RunConfig& cfg) { return RunState(cfg); }
RunStats run_to_completion(RunState& state);

}  // namespace exlab::sim
