#pragma once

// Tables of results rendered as aligned text, CSV or JSON. Absent values are
// "absent" in text and CSV and null in JSON; JSON is a top-level array of row
// objects with sorted keys, one row per line.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace grpinv::cli {

using Cell = std::variant<std::monostate, std::int64_t, std::string>;

enum class Format { text, csv, json };

/// "text", "csv" or "json"; throws usage_error otherwise.
Format parse_format(const std::string& name);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Row length must match the column count.
  void add_row(std::vector<Cell> row);
};

std::string render_text(const ResultTable& table);
std::string render_csv(const ResultTable& table);
std::string render_json(const ResultTable& table);
std::string render(const ResultTable& table, Format format);

/// Reads CSV as produced by render_csv (integers become numbers, "absent" null).
ResultTable parse_csv(const std::string& csv);
std::string csv_to_json(const std::string& csv);

}  // namespace grpinv::cli
