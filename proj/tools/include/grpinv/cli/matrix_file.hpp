#pragma once

// JSON matrix files:
//   { "p": 5 (optional), "n": rows, "cols": columns (optional, default n),
//     "d": variables, "skew": true (optional),
//     "entries": [ { "name": "...", "slices": d arrays of n x cols integers,
//                    "omega_slots": [[k, i, j], ...] (optional, 1-based) } ] }

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grpinv/catalog.hpp"

namespace grpinv::cli {

/// Unparseable JSON (line/column 1-based) or a document violating the schema.
class malformed_input : public std::runtime_error {
 public:
  malformed_input(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An entry that is not skew-symmetric with zero diagonal after reduction mod p.
class non_skew_entry : public std::runtime_error {
 public:
  non_skew_entry(const std::string& name, std::uint32_t p)
      : std::runtime_error("entry '" + name + "' is not skew-symmetric over F_" + std::to_string(p)), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct MatrixFile {
  std::optional<std::uint32_t> p;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nvars = 0;
  bool skew = true;
  std::vector<NamedMatrix> entries;

  bool cols_default() const noexcept { return cols == rows; }

  const NamedMatrix& find(const std::string& name) const;
  /// Entry reduced mod p; throws non_skew_entry for skew files whose entry is not skew over F_p.
  LinFormMatrix instantiate(const NamedMatrix& entry, std::uint32_t p) const;
};

MatrixFile parse_matrix_file(const std::string& text);
MatrixFile load_matrix_file(const std::string& path);

/// Pretty-printed JSON with a trailing newline.
std::string to_json(const MatrixFile& file);

/// Prime-generic file for matrices of a common shape.
MatrixFile make_matrix_file(std::vector<NamedMatrix> entries, bool skew = true);

}  // namespace grpinv::cli
