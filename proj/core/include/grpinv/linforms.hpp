#pragma once

// Three-way tensors over F_p, their flattenings as matrices of linear forms,
// the adjoint of a skew-symmetric matrix, and the GL actions on both.
//
// Conventions: a matrix of linear forms D(z) = sum_k D^(k) z_k is stored as
// its coefficient slices D^(k). Substitutions act on row vectors, so
// D(zS) has slices sum_k S(l,k) D^(k) for l = 1..d.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grpinv/matrix.hpp"
#include "grpinv/poly.hpp"

namespace grpinv {

class LinFormMatrix {
 public:
  LinFormMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::size_t nvars);
  /// All slices must share field and shape; at least one slice.
  explicit LinFormMatrix(std::vector<FpMatrix> slices);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return slices_.size(); }
  bool square() const noexcept { return rows_ == cols_; }

  const FpMatrix& slice(std::size_t k) const { return slices_.at(k); }
  const std::vector<FpMatrix>& slices() const noexcept { return slices_; }
  Residue coeff(std::size_t k, std::size_t i, std::size_t j) const { return slices_.at(k)(i, j); }
  void set(std::size_t k, std::size_t i, std::size_t j, std::int64_t v) { slices_.at(k).set(i, j, v); }

  bool is_zero() const noexcept;
  /// Every slice skew-symmetric with zero diagonal.
  bool is_skew_symmetric() const noexcept;

  /// Entry (i, j) as a linear form in `ring` (which must have nvars() variables).
  Poly entry(const RingPtr& ring, std::size_t i, std::size_t j) const;
  std::string to_string(const std::string& prefix = "y") const;

  friend bool operator==(const LinFormMatrix&, const LinFormMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FpMatrix> slices_;
};

/// sum_k D^(k) v_k.
FpMatrix evaluate(const LinFormMatrix& d, std::span<const Residue> v);

/// left * D(x S) * right for a square substitution matrix S (no invertibility needed).
LinFormMatrix substitute_and_multiply(const LinFormMatrix& d, const FpMatrix& left,
                                      const FpMatrix& subst, const FpMatrix& right);

/// C(y) = X B(yZ) X^T; X and Z must be invertible.
LinFormMatrix transform(const LinFormMatrix& b, const FpMatrix& x, const FpMatrix& z);

/// B^bullet(x): the n x d matrix in n variables with entry (i, k) = sum_j B^(k)_ij x_j.
LinFormMatrix adjoint(const LinFormMatrix& b);

/// Pfaffian of an even-size skew-symmetric matrix, by expansion along the first
/// row; Pf of the standard symplectic block matrix is +1.
Poly pfaffian(const LinFormMatrix& b, const RingPtr& ring);
Poly pfaffian(const LinFormMatrix& b);

class Tensor3 {
 public:
  Tensor3(PrimeField field, std::size_t r, std::size_t s, std::size_t t);

  /// The tensor whose third flattening is the square matrix b.
  static Tensor3 from_third_flattening(const LinFormMatrix& b);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim(std::size_t axis) const;

  Residue operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return a_[(i * s_ + j) * t_ + k];
  }
  Residue& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
    return a_[(i * s_ + j) * t_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { (*this)(i, j, k) = field_.reduce(v); }

  /// r == s and a_ijk = -a_jik for all indices.
  bool is_skew() const noexcept;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  PrimeField field_;
  std::size_t r_, s_, t_;
  std::vector<Residue> a_;
};

/// Flattening along axis 1, 2 or 3 as a matrix of linear forms:
/// axis 1 -> s x t in r variables, axis 2 -> r x t in s variables,
/// axis 3 -> r x s in t variables.
LinFormMatrix flatten(const Tensor3& t, int axis);

/// (A1, A2, A3) . t, with A_i(e_j) given by column j of A_i.
Tensor3 act(const Tensor3& t, const FpMatrix& a1, const FpMatrix& a2, const FpMatrix& a3);

}  // namespace grpinv
