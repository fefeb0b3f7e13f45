#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "exlab/numeric/real.hpp"

namespace exlab::cli {

/// One output line; cells are already rendered text, "" for an absent value.
struct ReportRow {
  std::vector<std::string> cells;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// A table with a fixed column list.
class Report {
 public:
  Report() = default;
  explicit Report(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<ReportRow>& rows() const { return rows_; }

  /// Appends a row; columns not named stay empty. Throws std::invalid_argument
  /// for an unknown column.
  void add(std::initializer_list<std::pair<std::string_view, std::string>> cells);
  void add(ReportRow row);

  /// Cell text, or "" when the column does not exist.
  const std::string& cell(std::size_t row, std::string_view column) const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<ReportRow> rows_;
};

/// CSV with a header row; fields containing a comma, quote or line break are
/// quoted with doubled quotes.
std::string to_csv(const Report& report);
/// Inverse of to_csv. Throws std::invalid_argument on malformed input.
Report parse_csv(std::string_view text);

/// JSON array with one object per row, keyed by column. Integers that fit in
/// 64 bits and decimals of at most 17 significant digits become numbers,
/// empty cells null, everything else (rationals, long decimals) strings.
std::string to_json(const Report& report);

/// Significant decimal digits carried by a binary precision.
int digits_for_bits(mpfr_prec_t bits);

std::string format_real(const Real& x, int digits);
/// At most 17 significant digits, the limit of a double.
std::string format_double(double x, int digits);
/// Always "p/q", also for integers.
std::string format_rational(const mpq_class& q);
std::string format_integer(const mpz_class& z);

}  // namespace exlab::cli
