#include <sstream>

#include <doctest.h>

#include "exlab/errors.hpp"
#include "exlab/exact/count_table.hpp"
#include "support/enumerate.hpp"

using exlab::exact::ConnectedCountTable;
using exlab::exact::Count;
using exlab::exact::TableLimits;

namespace {

const ConnectedCountTable& shared_table() {
  static const ConnectedCountTable table(TableLimits{100, 6, 12});
  return table;
}

Count power(long base, long e) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

TEST_CASE("total graph counts") {
  CHECK(exlab::exact::total_graph_count(3, 3) == 1);
  CHECK(exlab::exact::total_graph_count(4, 2) == 15);
  CHECK(exlab::exact::total_graph_count(4, 7) == 0);
}

TEST_CASE("connected counts match exhaustive enumeration for k <= 6") {
  const auto& table = shared_table();
  for (int k = 1; k <= 6; ++k) {
    const auto expected = exlab::testing::connected_counts_by_enumeration(k);
    for (std::size_t m = 0; m < expected.size(); ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(table.count(k, static_cast<long>(m)) == static_cast<long>(expected[m]));
    }
  }
}

TEST_CASE("spot values") {
  const auto& table = shared_table();
  CHECK(table.count(3, 3) == 1);
  CHECK(table.count(4, 4) == 15);
  CHECK(table.count(5, 4) == 125);
  CHECK(table.count(5, 5) == 222);
  CHECK(table.count(6, 6) == 3660);
}

TEST_CASE("Cayley row up to k = 100") {
  const auto& table = shared_table();
  CHECK(table.count(1, 0) == 1);
  for (long k = 2; k <= 100; ++k) {
    CAPTURE(k);
    CHECK(table.count(k, k - 1) == power(k, k - 2));
  }
}

TEST_CASE("range edges and complete graphs") {
  const auto& table = shared_table();
  for (long k = 1; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(table.count(k, k * (k - 1) / 2) == 1);
    CHECK(table.count(k, k * (k - 1) / 2 + 1) == 0);
    if (k >= 2) CHECK(table.count(k, k - 2) == 0);
    Count total = 0;
    for (long m = 0; m <= k * (k - 1) / 2; ++m) total += table.count(k, m);
    CHECK(total <= power(2, k * (k - 1) / 2));
  }
}

TEST_CASE("band recurrence agrees with the dense inclusion-exclusion store") {
  const ConnectedCountTable dense_only(TableLimits{12, 0, 12});
  const ConnectedCountTable band_only(TableLimits{12, 8, 0});
  for (long k = 1; k <= 12; ++k)
    for (int e = -1; e <= 8; ++e) {
      CAPTURE(k);
      CAPTURE(e);
      CHECK(band_only.band(k, e) == dense_only.count(k, k + e));
    }
}

TEST_CASE("lookups outside the stores are resource errors") {
  const auto& table = shared_table();
  CHECK_THROWS_AS(table.count(101, 100), exlab::ResourceError);
  CHECK_THROWS_AS(table.count(50, 50 + 7), exlab::ResourceError);
  CHECK(table.covers(50, 56));
  CHECK_FALSE(table.covers(50, 57));
}

TEST_CASE("cache round trip") {
  const ConnectedCountTable table(TableLimits{30, 3, 8});
  std::stringstream ss;
  table.save(ss);
  CHECK(ss.str().rfind("exlab-ctable v1\n", 0) == 0);
  const auto loaded = ConnectedCountTable::load(ss);
  CHECK(loaded.limits().max_k == 30);
  for (long k = 1; k <= 30; ++k)
    for (long m = k - 1; m <= k + 3; ++m) CHECK(loaded.count(k, m) == table.count(k, m));
  for (long m = 0; m <= 28; ++m) CHECK(loaded.count(8, m) == table.count(8, m));

  std::stringstream bad("not a table\n");
  CHECK_THROWS(ConnectedCountTable::load(bad));
}
