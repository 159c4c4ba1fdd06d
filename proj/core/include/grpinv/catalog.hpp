#pragma once

// Prime-generic integer matrices of linear forms: entries are integers reduced
// mod p when instantiated, plus "omega slots" that receive the smallest
// primitive root of F_p. Built-in families: the six 4 x 4 matrices B1..B6 in
// three variables, their zero-paddings to 5 x 5, Lee's 5 x 5 matrix and the
// 3 x 3 non-generic example with chain (1, p, 3p^2 - 3p + 1).

#include <cstdint>
#include <string>
#include <vector>

#include "grpinv/linforms.hpp"

namespace grpinv {

/// 1-based (slice, row, column) position.
struct OmegaSlot {
  std::size_t k;
  std::size_t i;
  std::size_t j;
  friend bool operator==(const OmegaSlot&, const OmegaSlot&) = default;
};

class GenericMatrix {
 public:
  GenericMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  /// 0-based slice and position.
  std::int64_t coeff(std::size_t k, std::size_t i, std::size_t j) const;
  void set(std::size_t k, std::size_t i, std::size_t j, std::int64_t v);
  /// Sets (i, j) to v and (j, i) to -v in slice k; 1-based as in StructureConstant.
  void set_skew(std::size_t k, std::size_t i, std::size_t j, std::int64_t v);

  const std::vector<OmegaSlot>& omega_slots() const noexcept { return omega_; }
  void add_omega_slot(OmegaSlot slot);

  /// Reduce mod p and fill omega slots with primitive_element(p); when
  /// `mirror` is set each slot (k, i, j) also puts -omega at (k, j, i).
  LinFormMatrix over(std::uint32_t p, bool mirror = true) const;

  /// Square matrix padded with zero rows and columns to size n.
  GenericMatrix padded(std::size_t n) const;

  friend bool operator==(const GenericMatrix&, const GenericMatrix&) = default;

 private:
  std::size_t rows_, cols_, nvars_;
  std::vector<std::int64_t> coeffs_;  // slice-major
  std::vector<OmegaSlot> omega_;
};

struct NamedMatrix {
  std::string name;
  GenericMatrix matrix;
};

/// B1..B6: 4 x 4 skew-symmetric in variables (x, y, z); B6 uses omega.
std::vector<NamedMatrix> four_generator_family();

/// Rows (1)-(6) of the 5 x 5 classification: B1..B6 padded with a zero row and column.
std::vector<NamedMatrix> padded_family();

/// Lee's 5 x 5 matrix in three variables.
NamedMatrix lee_matrix();

/// [[z1, z3, z2], [0, z2, 0], [0, 0, z3]].
NamedMatrix nongeneric_matrix();

}  // namespace grpinv
