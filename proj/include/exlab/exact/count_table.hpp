#pragma once

#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace exlab::exact {

/// Exact non-negative graph count.
using Count = mpz_class;
/// Exact rational in canonical form (gcd 1, positive denominator); GMP keeps
/// results of arithmetic canonical.
using ExactRational = mpq_class;

/// Binomial coefficient C(n, r); zero when r > n.
Count binomial(unsigned long n, unsigned long r);

/// Number of simple labelled graphs on k vertices with m edges, C(k(k-1)/2, m).
Count total_graph_count(long k, long m);

struct TableLimits {
  /// Largest vertex count stored.
  int max_k = 400;
  /// Largest excess m - k kept for every k <= max_k.
  int max_excess = 8;
  /// Vertex counts up to this value also get every edge count m.
  int dense_max_k = 12;
};

/// Memoized exact counts c(k, m) of connected labelled graphs.
///
/// Two stores are built at construction and are immutable afterwards, so a
/// table may be shared by concurrent readers:
///
///  * a sparse band with excess -1..max_excess for every k <= max_k, filled
///    row by row in k by the edge-deletion recurrence
///      (k+e) c(k,k+e) = ((k^2-3k-2(e-1))/2) c(k,k+e-1)
///                       + (k(k-1)/2) sum_j C(k-2,j-1) sum_s c(j,j+s) c(k-j,k-j+e-1-s)
///    which only ever reads excesses <= e;
///  * a dense triangle for k <= dense_max_k, filled by root-component
///    inclusion-exclusion over the total graph counts.
///
/// The two routes overlap for small k and are checked against each other in
/// the tests.
class ConnectedCountTable {
 public:
  explicit ConnectedCountTable(TableLimits limits = {});

  const TableLimits& limits() const { return limits_; }

  /// c(k, m). Zero outside k-1 <= m <= k(k-1)/2. Throws ResourceError when
  /// (k, m) lies outside both stores.
  Count count(long k, long m) const;

  /// c(k, k+excess) by reference; requires k <= max_k and -1 <= excess <= max_excess.
  const Count& band(long k, int excess) const;

  bool covers(long k, long m) const;

  /// Text cache: header "exlab-ctable v1", a limits line, then one
  /// "k m count" record per stored non-zero entry.
  void save(std::ostream& os) const;
  static ConnectedCountTable load(std::istream& is);

 private:
  struct Unbuilt {};
  ConnectedCountTable(TableLimits limits, Unbuilt);

  void build_band();
  void build_dense();

  TableLimits limits_;
  std::vector<std::vector<Count>> band_;   // band_[k][excess + 1]
  std::vector<std::vector<Count>> dense_;  // dense_[k][m]
};

}  // namespace exlab::exact
