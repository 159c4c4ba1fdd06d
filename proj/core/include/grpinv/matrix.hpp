#pragma once

// Dense matrices over F_p, row-major.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "grpinv/gf.hpp"

namespace grpinv {

class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Integer entries, reduced mod p.
  FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FpMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { (*this)(i, j) = field_.reduce(v); }
  std::span<const Residue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Residue> data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  /// A^T = -A with zero diagonal.
  bool is_skew_symmetric() const noexcept;

  FpMatrix transpose() const;
  FpMatrix scaled(Residue c) const;
  std::size_t rank() const;
  Residue determinant() const;
  bool invertible() const { return square() && rank() == rows_; }
  /// Throws usage_error for singular or non-square input.
  FpMatrix inverse() const;

  /// Row vector times matrix.
  std::vector<Residue> left_multiply(std::span<const Residue> v) const;
  /// Matrix times column vector.
  std::vector<Residue> apply(std::span<const Residue> v) const;

  FpMatrix& operator+=(const FpMatrix& other);
  friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  void check_same_shape(const FpMatrix& other) const;

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Uniformly random invertible matrix (rejection sampling).
FpMatrix random_invertible(const PrimeField& field, std::size_t n, std::mt19937_64& rng);
FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng);

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t n);

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  bool full() const noexcept { return rows_.size() == n_; }
  /// Adds v if it is independent of the current basis; returns whether it was added.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  const std::vector<std::vector<Residue>>& rows() const noexcept { return rows_; }

 private:
  std::vector<Residue> reduced(std::span<const Residue> v) const;

  PrimeField field_;
  std::size_t n_;
  std::vector<std::vector<Residue>> rows_;  // each monic at pivots_[k]
  std::vector<std::size_t> pivots_;
};

/// Solution set {x : x A = b} of a linear system in row-vector form,
/// as a particular solution plus a kernel basis; nullopt when inconsistent.
struct AffineSolution {
  std::vector<Residue> particular;
  std::vector<std::vector<Residue>> kernel;
};
std::optional<AffineSolution> solve_left(const FpMatrix& a, std::span<const Residue> b);

}  // namespace grpinv
