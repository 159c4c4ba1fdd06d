#include "grpinv/cli/matrix_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "grpinv/errors.hpp"

namespace grpinv::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::size_t positive(const json& doc, const char* key, std::optional<std::size_t> fallback = std::nullopt) {
  if (!doc.contains(key)) {
    if (fallback) return *fallback;
    throw malformed_input(std::string("missing field '") + key + "'");
  }
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
    throw malformed_input(std::string("field '") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

NamedMatrix parse_entry(const json& e, std::size_t index, std::size_t rows, std::size_t cols, std::size_t nvars) {
  const std::string where = "entry " + std::to_string(index + 1);
  if (!e.is_object()) throw malformed_input(where + " is not an object");
  if (!e.contains("name") || !e.at("name").is_string()) throw malformed_input(where + " has no string 'name'");
  const std::string name = e.at("name").get<std::string>();
  const std::string label = "entry '" + name + "'";
  if (!e.contains("slices") || !e.at("slices").is_array() || e.at("slices").size() != nvars)
    throw malformed_input(label + " must have " + std::to_string(nvars) + " slices");
  GenericMatrix m(rows, cols, nvars);
  const json& slices = e.at("slices");
  for (std::size_t k = 0; k < nvars; ++k) {
    const json& s = slices[k];
    if (!s.is_array() || s.size() != rows)
      throw malformed_input(label + ": slice " + std::to_string(k + 1) + " must have " + std::to_string(rows) + " rows");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!s[i].is_array() || s[i].size() != cols)
        throw malformed_input(label + ": slice " + std::to_string(k + 1) + " row " + std::to_string(i + 1) +
                              " must have " + std::to_string(cols) + " entries");
      for (std::size_t j = 0; j < cols; ++j) {
        if (!s[i][j].is_number_integer()) throw malformed_input(label + ": entries must be integers");
        m.set(k, i, j, s[i][j].get<std::int64_t>());
      }
    }
  }
  if (e.contains("omega_slots")) {
    const json& slots = e.at("omega_slots");
    if (!slots.is_array()) throw malformed_input(label + ": 'omega_slots' must be an array");
    for (const auto& s : slots) {
      if (!s.is_array() || s.size() != 3 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned() ||
          !s[2].is_number_unsigned())
        throw malformed_input(label + ": omega slots are [k, i, j] triples of positive integers");
      try {
        m.add_omega_slot({s[0].get<std::size_t>(), s[1].get<std::size_t>(), s[2].get<std::size_t>()});
      } catch (const usage_error& err) {
        throw malformed_input(label + ": " + err.what());
      }
    }
  }
  return {name, std::move(m)};
}

}  // namespace

const NamedMatrix& MatrixFile::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw usage_error("no entry named '" + name + "'");
}

LinFormMatrix MatrixFile::instantiate(const NamedMatrix& entry, std::uint32_t p) const {
  LinFormMatrix m = entry.matrix.over(p, skew);
  if (skew && !m.is_skew_symmetric()) throw non_skew_entry(entry.name, p);
  return m;
}

MatrixFile parse_matrix_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw malformed_input("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column),
                          line, column);
  }
  if (!doc.is_object()) throw malformed_input("top level must be an object");
  MatrixFile file;
  if (doc.contains("p")) {
    const json& p = doc.at("p");
    if (!p.is_number_unsigned() || !is_prime(p.get<std::uint64_t>()) || p.get<std::uint64_t>() == 2 ||
        p.get<std::uint64_t>() >= (1u << 16))
      throw malformed_input("field 'p' must be an odd prime below 65536");
    file.p = p.get<std::uint32_t>();
  }
  file.rows = positive(doc, "n");
  file.cols = positive(doc, "cols", file.rows);
  file.nvars = positive(doc, "d");
  if (doc.contains("skew")) {
    if (!doc.at("skew").is_boolean()) throw malformed_input("field 'skew' must be a boolean");
    file.skew = doc.at("skew").get<bool>();
  }
  if (file.skew && file.rows != file.cols) throw malformed_input("skew-symmetric files need square slices");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw malformed_input("missing array 'entries'");
  const json& entries = doc.at("entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    file.entries.push_back(parse_entry(entries[i], i, file.rows, file.cols, file.nvars));
    for (std::size_t j = 0; j < i; ++j)
      if (file.entries[j].name == file.entries[i].name)
        throw malformed_input("duplicate entry name '" + file.entries[i].name + "'");
  }
  return file;
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string to_json(const MatrixFile& file) {
  // Keys in sorted order, one slice per line.
  std::ostringstream out;
  out << "{\n";
  if (!file.cols_default()) out << " \"cols\": " << file.cols << ",\n";
  out << " \"d\": " << file.nvars << ",\n";
  out << " \"entries\": [";
  for (std::size_t e = 0; e < file.entries.size(); ++e) {
    const auto& m = file.entries[e].matrix;
    out << (e == 0 ? "\n" : ",\n") << "  {\n";
    out << "   \"name\": " << json(file.entries[e].name).dump() << ",\n";
    if (!m.omega_slots().empty()) {
      json slots = json::array();
      for (const auto& s : m.omega_slots()) slots.push_back({s.k, s.i, s.j});
      out << "   \"omega_slots\": " << slots.dump() << ",\n";
    }
    out << "   \"slices\": [";
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      json slice = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.coeff(k, i, j));
        slice.push_back(row);
      }
      out << (k == 0 ? "\n" : ",\n") << "    " << slice.dump();
    }
    out << "\n   ]\n  }";
  }
  out << "\n ],\n";
  out << " \"n\": " << file.rows;
  if (file.p) out << ",\n \"p\": " << *file.p;
  if (!file.skew) out << ",\n \"skew\": false";
  out << "\n}\n";
  return out.str();
}

MatrixFile make_matrix_file(std::vector<NamedMatrix> entries, bool skew) {
  if (entries.empty()) throw usage_error("matrix file needs at least one entry");
  MatrixFile file;
  file.rows = entries.front().matrix.rows();
  file.cols = entries.front().matrix.cols();
  file.nvars = entries.front().matrix.nvars();
  file.skew = skew;
  if (skew && file.rows != file.cols) throw usage_error("skew-symmetric files need square slices");
  for (const auto& e : entries)
    if (e.matrix.rows() != file.rows || e.matrix.cols() != file.cols || e.matrix.nvars() != file.nvars)
      throw usage_error("matrix file entries must share their shape");
  file.entries = std::move(entries);
  return file;
}

}  // namespace grpinv::cli
