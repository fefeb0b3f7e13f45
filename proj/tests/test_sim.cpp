#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <doctest.h>

#include "exlab/errors.hpp"
#include "exlab/exact/alpha.hpp"
#include "exlab/sim/aggregate.hpp"

namespace sim = exlab::sim;

namespace {

double chi_square_p(double stat, double dof) {
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), stat));
}

/// Goodness of fit against equal cell probabilities.
double uniform_p(const std::vector<long>& counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0.0;
  for (const long c : counts) stat += (c - expected) * (c - expected) / expected;
  return chi_square_p(stat, static_cast<double>(counts.size() - 1));
}

/// Two-sample homogeneity test over matching cells.
double homogeneity_p(const std::vector<long>& a, const std::vector<long>& b) {
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  double stat = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0.0) continue;
    ++cells;
    const double ea = col * na / (na + nb), eb = col * nb / (na + nb);
    stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  return chi_square_p(stat, static_cast<double>(cells - 1));
}

std::size_t edge_index(sim::Edge e, sim::Vertex n) {
  // Row-major index of (u, v), u < v, among the C(n,2) pairs.
  return static_cast<std::size_t>(e.u) * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1);
}

sim::RunConfig config(sim::Vertex n, std::uint64_t seed, std::set<long> tracked, long l_stop) {
  sim::RunConfig c;
  c.n = n;
  c.seed = seed;
  c.tracked = std::move(tracked);
  c.l_stop = l_stop;
  return c;
}

}  // namespace

TEST_CASE("forest merge and internal arithmetic") {
  sim::ComponentForest f(5);
  CHECK(f.component_count() == 5);
  const auto e1 = f.add_edge(0, 1);
  CHECK(e1.kind == sim::Event::Kind::kMerge);
  CHECK(e1.excess_new == -1);
  f.add_edge(1, 2);
  const auto e3 = f.add_edge(0, 2);
  CHECK(e3.kind == sim::Event::Kind::kInternal);
  CHECK(e3.excess_a == -1);
  CHECK(e3.excess_new == 0);
  CHECK(e3.size_new == 3);
  const auto e4 = f.add_edge(3, 2);
  CHECK(e4.excess_new == 0);  // tree joins a unicyclic component
  CHECK(f.component_count() == 2);
  CHECK(f.check_invariants());
}

TEST_CASE("edge streams emit each edge once") {
  for (const auto mode : {sim::StreamMode::kFullShuffle, sim::StreamMode::kRejection}) {
    sim::EdgeStream s(9, 42, mode);
    std::vector<int> seen(36, 0);
    while (const auto e = s.next()) {
      REQUIRE(e->u < e->v);
      REQUIRE(e->v < 9);
      ++seen[edge_index(*e, 9)];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(s.emitted() == 36);
  }
  CHECK(sim::EdgeStream::default_mode(4472) == sim::StreamMode::kFullShuffle);
  CHECK(sim::EdgeStream::default_mode(4473) == sim::StreamMode::kRejection);
}

TEST_CASE("bounded draws are reproducible and in range") {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = sim::bounded(a, 37);
    CHECK(x < 37);
    CHECK(x == sim::bounded(b, 37));
  }
}

TEST_CASE("tiny runs") {
  auto one = sim::new_run(config(1, 3, {-1, 0}, 0));
  const auto s1 = one.run_to_completion();
  CHECK(s1.edges_processed == 0);
  CHECK(s1.V.at(-1) == 1);
  CHECK(s1.V.at(0) == 0);
  CHECK(s1.transitions.at(-1) == 0);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto two = sim::new_run(config(2, seed, {-1}, -1));
    const auto ev = two.step();
    REQUIRE(ev);
    CHECK(ev->kind == sim::Event::Kind::kMerge);
    CHECK(ev->excess_new == -1);
    const auto s2 = two.run_to_completion();
    CHECK(s2.transitions.at(-1) == 0);
    CHECK_FALSE(two.step());
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto three = sim::new_run(config(3, seed, {-1}, 0));
    const auto s3 = three.run_to_completion();
    CHECK(s3.edges_processed == 3);
    CHECK(three.exhausted());
    CHECK(s3.transitions.at(-1) == 1);
    CHECK(s3.transition_orders.at(-1).at(3) == 1);
  }
}

TEST_CASE("configuration checks") {
  CHECK_THROWS_AS(sim::new_run(config(0, 1, {}, 0)), exlab::DomainError);
  CHECK_THROWS_AS(sim::new_run(config(5, 1, {3}, 2)), exlab::DomainError);
  CHECK_THROWS_AS(sim::new_run(config(5, 1, {-2}, 2)), exlab::DomainError);
}

TEST_CASE("invariants along instrumented runs, with a brute-force V oracle") {
  for (sim::Vertex n = 2; n <= 7; ++n)
    for (const auto mode : {sim::StreamMode::kFullShuffle, sim::StreamMode::kRejection})
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto cfg = config(n, sim::replica_seed(99, seed), {-1, 0, 1, 2, 3}, 3);
        cfg.mode = mode;
        sim::RunState run(cfg);
        std::vector<std::int64_t> last(n, -1);
        std::map<long, std::set<sim::Vertex>> attained;
        for (sim::Vertex v = 0; v < n; ++v) attained[-1].insert(v);
        std::int64_t edges = 0;
        while (!run.settled()) {
          const auto ev = run.step();
          if (!ev) break;
          ++edges;
          REQUIRE(run.forest().check_invariants());
          for (sim::Vertex v = 0; v < n; ++v) {
            const auto e = run.forest().excess_of(run.forest().find_root(v));
            REQUIRE(e >= last[v]);
            last[v] = e;
            attained[static_cast<long>(e)].insert(v);
          }
        }
        const auto& st = run.stats();
        CHECK(st.edges_processed == edges);
        CHECK(edges <= static_cast<std::int64_t>(n) * (n - 1) / 2);
        for (long l = -1; l <= 3; ++l) {
          CAPTURE(n);
          CAPTURE(seed);
          CAPTURE(l);
          CHECK(st.V.at(l) == static_cast<std::int64_t>(attained[l].size()));
          CHECK(st.V.at(l) <= n);
          CHECK(st.V_max.at(l) <= n);
          CHECK(st.transitions.at(l) >= 0);
        }
      }
}

TEST_CASE("rejection and full shuffle draw the same permutation distribution") {
  const sim::Vertex n = 5;
  const int samples = 1'000'000;
  auto collect = [&](sim::StreamMode mode, std::uint64_t base) {
    std::vector<long> first(10, 0), prefix(720, 0);
    for (int i = 0; i < samples; ++i) {
      sim::EdgeStream s(n, sim::replica_seed(base, static_cast<std::uint64_t>(i)), mode);
      const auto a = edge_index(*s.next(), n);
      const auto b = edge_index(*s.next(), n);
      const auto c = edge_index(*s.next(), n);
      ++first[a];
      // Ordered triples of distinct edges, ranked into 10*9*8 cells.
      const std::size_t b_rank = b - (b > a);
      const std::size_t c_rank = c - (c > a) - (c > b);
      ++prefix[(a * 9 + b_rank) * 8 + c_rank];
    }
    return std::pair{first, prefix};
  };
  const auto [full_first, full_prefix] = collect(sim::StreamMode::kFullShuffle, 1);
  const auto [rej_first, rej_prefix] = collect(sim::StreamMode::kRejection, 2);
  CHECK(uniform_p(full_first) > 0.01);
  CHECK(uniform_p(rej_first) > 0.01);
  CHECK(uniform_p(full_prefix) > 0.01);
  CHECK(uniform_p(rej_prefix) > 0.01);
  CHECK(homogeneity_p(full_first, rej_first) > 0.01);
  CHECK(homogeneity_p(full_prefix, rej_prefix) > 0.01);
}

TEST_CASE("simulated tree-to-unicyclic transitions at n = 5 match the exact value") {
  sim::AggregateConfig cfg;
  cfg.n = 5;
  cfg.base_seed = 2024;
  cfg.replicas = 100'000;
  cfg.tracked = {-1};
  const auto agg = sim::aggregate(cfg);
  const exlab::exact::ConnectedCountTable table(exlab::exact::TableLimits{5, 0, 5});
  const double exact = alpha_total_exact(table, 5, -1).get_d();
  CHECK(std::fabs(agg.transitions.at(-1).mean - exact) <= 3.0 * agg.transitions.at(-1).stderr_);
}

TEST_CASE("aggregation is deterministic across thread counts") {
  sim::AggregateConfig cfg;
  cfg.n = 200;
  cfg.base_seed = 5;
  cfg.replicas = 64;
  cfg.tracked = {-1, 0, 1, 2};
  cfg.threads = 1;
  const auto a = sim::aggregate(cfg);
  cfg.threads = 4;
  const auto b = sim::aggregate(cfg);
  for (long l = -1; l <= 2; ++l) {
    CHECK(a.transitions.at(l).mean == b.transitions.at(l).mean);
    CHECK(a.transitions.at(l).variance == b.transitions.at(l).variance);
    CHECK(a.V.at(l).mean == b.V.at(l).mean);
    CHECK(a.V_max.at(l).stderr_ == b.V_max.at(l).stderr_);
    CHECK(a.transition_orders.at(l).size() == b.transition_orders.at(l).size());
  }
  CHECK(a.edges_processed.mean == b.edges_processed.mean);
  CHECK(a.transitions.at(0).stderr_ == doctest::Approx(std::sqrt(a.transitions.at(0).variance / 64.0)));
}

TEST_CASE("a single replica reproduces its run with zero stderr") {
  sim::AggregateConfig cfg;
  cfg.n = 50;
  cfg.base_seed = 77;
  cfg.replicas = 1;
  cfg.tracked = {0, 1};
  const auto agg = sim::aggregate(cfg);
  sim::RunState run(config(50, sim::replica_seed(77, 0), {0, 1}, 1));
  const auto st = run.run_to_completion();
  for (long l : {0L, 1L}) {
    CHECK(agg.transitions.at(l).mean == double(st.transitions.at(l)));
    CHECK(agg.V.at(l).mean == double(st.V.at(l)));
    CHECK(agg.transitions.at(l).stderr_ == 0.0);
  }
}

TEST_CASE("lazy repeat filtering leaves the statistics unchanged in distribution") {
  // Lazy and strict filtering consume the random stream differently, so they
  // are compared through their means.
  sim::AggregateConfig cfg;
  cfg.n = 60;
  cfg.base_seed = 9;
  cfg.replicas = 20'000;
  cfg.tracked = {0, 1};
  cfg.mode = sim::StreamMode::kRejection;
  const auto lazy = sim::aggregate(cfg);
  cfg.lazy_dedupe = false;
  const auto strict = sim::aggregate(cfg);
  for (long l : {0L, 1L}) {
    const auto& a = lazy.transitions.at(l);
    const auto& b = strict.transitions.at(l);
    CHECK(std::fabs(a.mean - b.mean) <= 3.0 * std::hypot(a.stderr_, b.stderr_));
    const auto& va = lazy.V.at(l);
    const auto& vb = strict.V.at(l);
    CHECK(std::fabs(va.mean - vb.mean) <= 3.0 * std::hypot(va.stderr_, vb.stderr_));
  }
}

TEST_CASE("seed derivation") {
  CHECK(sim::mix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(sim::replica_seed(5, 0) == sim::mix64(5));
  CHECK(sim::replica_seed(5, 3) == sim::mix64(5 ^ (0x9E3779B97F4A7C15ULL * 3)));
}
