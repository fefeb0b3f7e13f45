#include "exlab/exact/count_table.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "exlab/errors.hpp"

namespace exlab::exact {

namespace {

constexpr const char* kCacheHeader = "exlab-ctable v1";

long max_edges(long k) { return k * (k - 1) / 2; }

}  // namespace

Count binomial(unsigned long n, unsigned long r) {
  Count out;
  if (r > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

Count total_graph_count(long k, long m) {
  if (k < 1 || m < 0) throw DomainError("total_graph_count requires k >= 1 and m >= 0");
  return binomial(static_cast<unsigned long>(max_edges(k)), static_cast<unsigned long>(m));
}

ConnectedCountTable::ConnectedCountTable(TableLimits limits, Unbuilt) : limits_(limits) {
  if (limits_.max_k < 1 || limits_.max_excess < -1 || limits_.dense_max_k < 0) {
    throw DomainError("invalid connected-count table limits");
  }
  band_.assign(limits_.max_k + 1, std::vector<Count>(limits_.max_excess + 2));
  dense_.resize(limits_.dense_max_k + 1);
  for (long k = 0; k <= limits_.dense_max_k; ++k) dense_[k].assign(max_edges(k) + 1, Count());
}

ConnectedCountTable::ConnectedCountTable(TableLimits limits)
    : ConnectedCountTable(limits, Unbuilt{}) {
  build_band();
  build_dense();
}

void ConnectedCountTable::build_band() {
  const int top = limits_.max_excess;
  band_[1][0] = 1;  // the single vertex, excess -1

  Count inner, sum, term;
  std::vector<Count> binom_row;
  for (long k = 2; k <= limits_.max_k; ++k) {
    // C(k-2, j-1) for j = 1..k-1, built multiplicatively.
    binom_row.assign(k, Count());
    binom_row[1] = 1;
    for (long j = 2; j < k; ++j) {
      binom_row[j] = binom_row[j - 1] * (k - j);
      mpz_divexact_ui(binom_row[j].get_mpz_t(), binom_row[j].get_mpz_t(), j - 1);
    }

    for (int e = -1; e <= top; ++e) {
      Count& out = band_[k][e + 1];
      if (k + e > max_edges(k)) continue;

      // Bridge term: the deleted edge joins components of orders j and k-j
      // with excesses s and e-1-s. Terms j and k-j are mirror images.
      sum = 0;
      for (long j = 1; 2 * j <= k; ++j) {
        inner = 0;
        const auto& left = band_[j];
        const auto& right = band_[k - j];
        for (int s = -1; s <= e; ++s) {
          const int t = e - 1 - s;
          if (t < -1) break;
          const Count& a = left[s + 1];
          const Count& b = right[t + 1];
          if (mpz_sgn(a.get_mpz_t()) == 0 || mpz_sgn(b.get_mpz_t()) == 0) continue;
          mpz_addmul(inner.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
        if (mpz_sgn(inner.get_mpz_t()) == 0) continue;
        if (2 * j != k) inner *= 2;
        mpz_addmul(sum.get_mpz_t(), binom_row[j].get_mpz_t(), inner.get_mpz_t());
      }
      sum *= k * (k - 1) / 2;

      // Non-bridge term: a connected (k, k+e-1) graph plus one of its non-edges.
      if (e >= 0) {
        const long non_edges = (k * k - 3 * k - 2 * (e - 1)) / 2;
        const Count& prev = band_[k][e];
        if (non_edges > 0 && mpz_sgn(prev.get_mpz_t()) != 0) {
          term = prev * non_edges;
          sum += term;
        }
      }
      mpz_divexact_ui(out.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(k + e));
    }
  }
}

void ConnectedCountTable::build_dense() {
  const long top = limits_.dense_max_k;
  if (top < 1) return;
  const long max_pairs = std::max(max_edges(top), top);
  std::vector<std::vector<Count>> binom(max_pairs + 1);
  for (long p = 0; p <= max_pairs; ++p) {
    binom[p].resize(p + 1);
    binom[p][0] = 1;
    binom[p][p] = 1;
    for (long r = 1; r < p; ++r) binom[p][r] = binom[p - 1][r - 1] + binom[p - 1][r];
  }
  auto graphs = [&](long q, long r) -> const Count* {
    const long p = max_edges(q);
    if (r < 0 || r > p) return nullptr;
    return &binom[p][r];
  };

  Count acc;
  for (long k = 1; k <= top; ++k) {
    const long edges = max_edges(k);
    for (long m = 0; m <= edges; ++m) {
      if (m < k - 1) continue;
      // Subtract graphs whose component containing vertex 1 has j < k vertices.
      acc = *graphs(k, m);
      for (long j = 1; j < k; ++j) {
        const Count& choose = binom[k - 1][j - 1];
        for (long i = j - 1; i <= std::min(max_edges(j), m); ++i) {
          const Count& c = dense_[j][i];
          const Count* g = graphs(k - j, m - i);
          if (g == nullptr || mpz_sgn(c.get_mpz_t()) == 0) continue;
          acc -= choose * c * *g;
        }
      }
      dense_[k][m] = acc;
    }
  }
}

Count ConnectedCountTable::count(long k, long m) const {
  if (k < 1 || m < 0) throw DomainError("connected_count requires k >= 1 and m >= 0");
  if (m < k - 1 || m > max_edges(k)) return Count();
  if (k <= limits_.dense_max_k) return dense_[k][m];
  const long excess = m - k;
  if (k <= limits_.max_k && excess <= limits_.max_excess) return band_[k][excess + 1];
  std::ostringstream msg;
  msg << "c(" << k << "," << m << ") is outside the table (max_k=" << limits_.max_k
      << ", max_excess=" << limits_.max_excess << ", dense_max_k=" << limits_.dense_max_k << ")";
  throw ResourceError(msg.str());
}

const Count& ConnectedCountTable::band(long k, int excess) const {
  if (k < 1 || k > limits_.max_k || excess < -1 || excess > limits_.max_excess) {
    throw ResourceError("band entry outside the table");
  }
  return band_[k][excess + 1];
}

bool ConnectedCountTable::covers(long k, long m) const {
  if (k < 1 || m < 0) return false;
  if (m < k - 1 || m > max_edges(k)) return true;
  if (k <= limits_.dense_max_k) return true;
  return k <= limits_.max_k && m - k <= limits_.max_excess;
}

void ConnectedCountTable::save(std::ostream& os) const {
  os << kCacheHeader << '\n';
  os << "limits " << limits_.max_k << ' ' << limits_.max_excess << ' ' << limits_.dense_max_k
     << '\n';
  for (long k = 1; k <= limits_.max_k; ++k) {
    for (int e = -1; e <= limits_.max_excess; ++e) {
      const Count& c = band_[k][e + 1];
      if (mpz_sgn(c.get_mpz_t()) != 0) os << k << ' ' << k + e << ' ' << c << '\n';
    }
  }
  for (long k = 1; k <= limits_.dense_max_k; ++k) {
    for (long m = 0; m <= max_edges(k); ++m) {
      const bool in_band = k <= limits_.max_k && m >= k - 1 && m - k <= limits_.max_excess;
      const Count& c = dense_[k][m];
      if (!in_band && mpz_sgn(c.get_mpz_t()) != 0) os << k << ' ' << m << ' ' << c << '\n';
    }
  }
}

ConnectedCountTable ConnectedCountTable::load(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCacheHeader) {
    throw std::runtime_error("not an exlab-ctable v1 cache");
  }
  TableLimits limits;
  std::string word;
  if (!std::getline(is, line)) throw std::runtime_error("cache is missing its limits line");
  std::istringstream lim(line);
  if (!(lim >> word >> limits.max_k >> limits.max_excess >> limits.dense_max_k) ||
      word != "limits") {
    throw std::runtime_error("malformed cache limits line");
  }
  ConnectedCountTable table(limits, Unbuilt{});
  long k = 0, m = 0;
  std::string digits;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream rec(line);
    if (!(rec >> k >> m >> digits)) throw std::runtime_error("malformed cache record: " + line);
    Count value;
    if (value.set_str(digits, 10) != 0 || value < 0) {
      throw std::runtime_error("malformed count in cache record: " + line);
    }
    bool placed = false;
    if (k >= 1 && k <= limits.max_k && m >= k - 1 && m - k <= limits.max_excess) {
      table.band_[k][m - k + 1] = value;
      placed = true;
    }
    if (k >= 1 && k <= limits.dense_max_k && m >= 0 && m <= max_edges(k)) {
      table.dense_[k][m] = value;
      placed = true;
    }
    if (!placed) throw std::runtime_error("cache record outside declared limits: " + line);
  }
  return table;
}

}  // namespace exlab::exact
