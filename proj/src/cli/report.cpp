#include "exlab/cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

#include <json.hpp>

namespace exlab::cli {

Report::Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Report::add(std::initializer_list<std::pair<std::string_view, std::string>> cells) {
  ReportRow row{std::vector<std::string>(columns_.size())};
  for (const auto& [name, value] : cells) {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw std::invalid_argument("unknown report column: " + std::string(name));
    row.cells[static_cast<std::size_t>(it - columns_.begin())] = value;
  }
  rows_.push_back(std::move(row));
}

void Report::add(ReportRow row) {
  if (row.cells.size() != columns_.size()) throw std::invalid_argument("row width does not match the header");
  rows_.push_back(std::move(row));
}

const std::string& Report::cell(std::size_t row, std::string_view column) const {
  static const std::string empty;
  const auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end() || row >= rows_.size()) return empty;
  return rows_[row].cells[static_cast<std::size_t>(it - columns_.begin())];
}

namespace {

void put_field(std::string& out, const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    out += field;
    return;
  }
  out += '"';
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void put_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    put_field(out, fields[i]);
  }
  out += '\n';
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      if (!field.empty()) throw std::invalid_argument("stray quote in CSV field");
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      fields.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(fields));
      fields.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any) {
    fields.push_back(std::move(field));
    lines.push_back(std::move(fields));
  }
  return lines;
}

nlohmann::json json_value(const std::string& cell) {
  if (cell.empty()) return nullptr;
  static const std::regex integer(R"(-?(0|[1-9][0-9]*))");
  static const std::regex decimal(R"(-?[0-9]+(\.[0-9]+)?([eE][-+]?[0-9]+)?)");
  if (std::regex_match(cell, integer)) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec == std::errc() && end == cell.data() + cell.size()) return v;
    return cell;
  }
  if (std::regex_match(cell, decimal)) {
    std::string digits;
    for (const char c : cell.substr(0, cell.find_first_of("eE")))
      if (c >= '0' && c <= '9' && !(digits.empty() && c == '0')) digits += c;
    if (digits.size() <= 17) {
      const double v = std::strtod(cell.c_str(), nullptr);
      if (std::isfinite(v)) return v;
    }
  }
  return cell;
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out;
  put_line(out, report.columns());
  for (const auto& row : report.rows()) put_line(out, row.cells);
  return out;
}

Report parse_csv(std::string_view text) {
  auto lines = split_csv(text);
  if (lines.empty()) throw std::invalid_argument("CSV has no header row");
  Report report(std::move(lines.front()));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != report.columns().size())
      throw std::invalid_argument("CSV row " + std::to_string(i) + " has the wrong number of fields");
    report.add(ReportRow{std::move(lines[i])});
  }
  return report;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows()) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < report.columns().size(); ++i) obj[report.columns()[i]] = json_value(row.cells[i]);
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

int digits_for_bits(mpfr_prec_t bits) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))));
}

std::string format_real(const Real& x, int digits) { return x.str(digits); }

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), x);
  return buf;
}

std::string format_rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_integer(const mpz_class& z) { return z.get_str(); }

}  // namespace exlab::cli
