#include "grpinv/cli/result_table.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>

#include "grpinv/errors.hpp"

namespace grpinv::cli {

namespace {

constexpr const char* kAbsent = "absent";

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return kAbsent;
  if (const auto* v = std::get_if<std::int64_t>(&c)) return std::to_string(*v);
  return std::get<std::string>(c);
}

Cell parse_cell(const std::string& s) {
  if (s == kAbsent) return std::monostate{};
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty() && s != "-") return v;
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw usage_error("unknown format '" + name + "' (expected text, csv or json)");
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw usage_error("row length does not match the column count");
  rows.push_back(std::move(row));
}

std::string render_text(const ResultTable& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    width[c] = table.columns[c].size();
    for (const auto& row : table.rows) width[c] = std::max(width[c], cell_text(row[c]).size());
  }
  std::ostringstream out;
  auto emit = [&](auto&& text_of) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      std::string s = text_of(c);
      if (c + 1 == table.columns.size()) {
        out << s;
      } else {
        out << s << std::string(width[c] - s.size() + 2, ' ');
      }
    }
    out << '\n';
  };
  emit([&](std::size_t c) { return table.columns[c]; });
  for (const auto& row : table.rows) emit([&](std::size_t c) { return cell_text(row[c]); });
  return out.str();
}

std::string render_csv(const ResultTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const ResultTable& table) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const Cell& cell = table.rows[r][c];
      if (std::holds_alternative<std::monostate>(cell)) {
        obj[table.columns[c]] = nullptr;
      } else if (const auto* v = std::get_if<std::int64_t>(&cell)) {
        obj[table.columns[c]] = *v;
      } else {
        obj[table.columns[c]] = std::get<std::string>(cell);
      }
    }
    out << (r ? ",\n " : "\n ") << obj.dump();
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
  return out.str();
}

std::string render(const ResultTable& table, Format format) {
  switch (format) {
    case Format::csv:
      return render_csv(table);
    case Format::json:
      return render_json(table);
    case Format::text:
      break;
  }
  return render_text(table);
}

ResultTable parse_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  ResultTable table;
  if (!std::getline(in, line)) throw usage_error("CSV input has no header");
  table.columns = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Cell> row;
    for (const auto& s : split(line, ',')) row.push_back(parse_cell(s));
    table.add_row(std::move(row));
  }
  return table;
}

std::string csv_to_json(const std::string& csv) { return render_json(parse_csv(csv)); }

}  // namespace grpinv::cli
