#include "exlab/sim/aggregate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "exlab/errors.hpp"

namespace exlab::sim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t replica_seed(std::uint64_t base_seed, std::uint64_t i) {
  return mix64(base_seed ^ (0x9E3779B97F4A7C15ULL * i));
}

namespace {

struct Sums {
  __int128 s1 = 0;
  __int128 s2 = 0;

  void add(std::int64_t x) {
    s1 += x;
    s2 += static_cast<__int128>(x) * x;
  }
  Sums& operator+=(const Sums& o) {
    s1 += o.s1;
    s2 += o.s2;
    return *this;
  }
  Moments moments(std::int64_t r) const {
    Moments m;
    const auto rr = static_cast<long double>(r);
    m.mean = static_cast<double>(static_cast<long double>(s1) / rr);
    if (r > 1) {
      // r·Σx² − (Σx)² is exact in 128 bits for every count this engine produces.
      const __int128 centered = static_cast<__int128>(r) * s2 - s1 * s1;
      const long double var = static_cast<long double>(centered) / (rr * (rr - 1.0L));
      m.variance = static_cast<double>(var);
      m.stderr_ = static_cast<double>(std::sqrt(var / rr));
    }
    return m;
  }
};

struct Accumulator {
  std::map<long, Sums> transitions, V, V_max;
  std::map<long, std::map<std::uint64_t, Sums>> orders;
  Sums edges;

  void add(const RunStats& s) {
    for (const auto& [l, x] : s.transitions) transitions[l].add(x);
    for (const auto& [l, x] : s.V) V[l].add(x);
    for (const auto& [l, x] : s.V_max) V_max[l].add(x);
    for (const auto& [l, hist] : s.transition_orders) {
      auto& dst = orders[l];
      for (const auto& [k, x] : hist) dst[k].add(x);
    }
    edges.add(s.edges_processed);
  }
  Accumulator& operator+=(const Accumulator& o) {
    for (const auto& [l, x] : o.transitions) transitions[l] += x;
    for (const auto& [l, x] : o.V) V[l] += x;
    for (const auto& [l, x] : o.V_max) V_max[l] += x;
    for (const auto& [l, hist] : o.orders) {
      auto& dst = orders[l];
      for (const auto& [k, x] : hist) dst[k] += x;
    }
    edges += o.edges;
    return *this;
  }
};

}  // namespace

AggregateStats aggregate(const AggregateConfig& cfg) {
  if (cfg.replicas < 1) throw DomainError("aggregate requires replicas >= 1");
  RunConfig base;
  base.n = cfg.n;
  base.tracked = cfg.tracked;
  base.l_stop = cfg.l_stop.value_or(cfg.tracked.empty() ? -1 : *cfg.tracked.rbegin());
  base.mode = cfg.mode;
  base.lazy_dedupe = cfg.lazy_dedupe;
  validate(base);

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, cfg.replicas));

  std::vector<Accumulator> partial(threads);
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned t) {
    try {
      for (std::int64_t i; (i = next.fetch_add(1)) < cfg.replicas;) {
        RunConfig rc = base;
        rc.seed = replica_seed(cfg.base_seed, static_cast<std::uint64_t>(i));
        RunState run(rc);
        partial[t].add(run.run_to_completion());
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(cfg.replicas);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator total;
  for (const auto& p : partial) total += p;

  AggregateStats out;
  out.n = cfg.n;
  out.base_seed = cfg.base_seed;
  out.replicas = cfg.replicas;
  for (const auto& [l, s] : total.transitions) out.transitions[l] = s.moments(cfg.replicas);
  for (const auto& [l, s] : total.V) out.V[l] = s.moments(cfg.replicas);
  for (const auto& [l, s] : total.V_max) out.V_max[l] = s.moments(cfg.replicas);
  for (const auto& [l, hist] : total.orders) {
    auto& dst = out.transition_orders[l];
    for (const auto& [k, s] : hist) dst[k] = s.moments(cfg.replicas);
  }
  out.edges_processed = total.edges.moments(cfg.replicas);
  return out;
}

}  // namespace exlab::sim
