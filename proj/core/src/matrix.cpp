#include "grpinv/matrix.hpp"

#include <algorithm>

namespace grpinv {

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw usage_error("ragged matrix literal");
    for (auto v : r) data_.push_back(field_.reduce(v));
  }
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

bool FpMatrix::is_skew_symmetric() const noexcept {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != field_.neg((*this)(j, i))) return false;
  }
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix r = *this;
  for (auto& v : r.data_) v = field_.mul(v, c);
  return r;
}

namespace {

// Gaussian elimination in place; returns rank and the determinant factor.
std::size_t eliminate(const PrimeField& f, std::vector<Residue>& a, std::size_t rows, std::size_t cols,
                      Residue* det) {
  std::size_t rank = 0;
  Residue d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
      d = f.neg(d);
    }
    const Residue pv = a[rank * cols + c];
    d = f.mul(d, pv);
    const Residue pinv = f.inv(pv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Residue factor = f.mul(a[r * cols + c], pinv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[rank * cols + k]));
    }
    ++rank;
  }
  if (det) *det = rank == rows ? d : 0;
  return rank;
}

}  // namespace

std::size_t FpMatrix::rank() const {
  std::vector<Residue> a = data_;
  return eliminate(field_, a, rows_, cols_, nullptr);
}

Residue FpMatrix::determinant() const {
  if (!square()) throw usage_error("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  std::vector<Residue> a = data_;
  Residue det = 0;
  eliminate(field_, a, rows_, cols_, &det);
  return det;
}

FpMatrix FpMatrix::inverse() const {
  if (!square()) throw usage_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  FpMatrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug(piv, c) == 0) ++piv;
    if (piv == n) throw usage_error("matrix is singular");
    if (piv != c)
      for (std::size_t k = 0; k < 2 * n; ++k) std::swap(aug(piv, k), aug(c, k));
    const Residue pinv = field_.inv(aug(c, c));
    for (std::size_t k = 0; k < 2 * n; ++k) aug(c, k) = field_.mul(aug(c, k), pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Residue factor = aug(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k)
        aug(r, k) = field_.sub(aug(r, k), field_.mul(factor, aug(c, k)));
    }
  }
  FpMatrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Residue> FpMatrix::left_multiply(std::span<const Residue> v) const {
  if (v.size() != rows_) throw usage_error("vector length does not match matrix rows");
  std::vector<Residue> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] = field_.add(out[j], field_.mul(v[i], (*this)(i, j)));
  }
  return out;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw usage_error("vector length does not match matrix columns");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
  return out;
}

void FpMatrix::check_same_shape(const FpMatrix& other) const {
  if (!(field_ == other.field_)) throw usage_error("matrices over different fields");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw usage_error("matrix shape mismatch");
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& other) {
  check_same_shape(other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], other.data_[k]);
  return *this;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  a.check_same_shape(b);
  FpMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
  return r;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.field_ == b.field_)) throw usage_error("matrices over different fields");
  if (a.cols_ != b.rows_) throw usage_error("matrix product shape mismatch");
  const auto& f = a.field_;
  FpMatrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
  FpMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

FpMatrix random_invertible(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FpMatrix m = random_matrix(field, n, n, rng);
    if (m.invertible()) return m;
  }
}

// ------------------------------------------------------------- EchelonBasis

EchelonBasis::EchelonBasis(PrimeField field, std::size_t n) : field_(field), n_(n) {}

std::vector<Residue> EchelonBasis::reduced(std::span<const Residue> v) const {
  if (v.size() != n_) throw usage_error("vector length does not match ambient dimension");
  std::vector<Residue> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue c = w[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[k]; j < n_; ++j) w[j] = field_.sub(w[j], field_.mul(c, rows_[k][j]));
  }
  return w;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  if (full()) return false;
  std::vector<Residue> w = reduced(v);
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Residue inv = field_.inv(w[piv]);
  for (auto& x : w) x = field_.mul(x, inv);
  // Rows stay sorted by pivot so a single forward pass reduces.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  std::vector<Residue> w = reduced(v);
  return std::all_of(w.begin(), w.end(), [](Residue r) { return r == 0; });
}

std::optional<AffineSolution> solve_left(const FpMatrix& a, std::span<const Residue> b) {
  // x A = b  <=>  A^T x^T = b^T. Row reduce [A^T | b].
  const auto& f = a.field();
  const std::size_t unknowns = a.rows();
  const std::size_t equations = a.cols();
  if (b.size() != equations) throw usage_error("right-hand side has wrong length");
  FpMatrix m(f, equations, unknowns + 1);
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) m(e, u) = a(u, e);
    m(e, unknowns) = b[e];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < equations; ++c) {
    std::size_t piv = r;
    while (piv < equations && m(piv, c) == 0) ++piv;
    if (piv == equations) continue;
    if (piv != r)
      for (std::size_t k = 0; k <= unknowns; ++k) std::swap(m(piv, k), m(r, k));
    const Residue inv = f.inv(m(r, c));
    for (std::size_t k = 0; k <= unknowns; ++k) m(r, k) = f.mul(m(r, k), inv);
    for (std::size_t e = 0; e < equations; ++e) {
      if (e == r || m(e, c) == 0) continue;
      const Residue factor = m(e, c);
      for (std::size_t k = 0; k <= unknowns; ++k) m(e, k) = f.sub(m(e, k), f.mul(factor, m(r, k)));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t e = r; e < equations; ++e)
    if (m(e, unknowns) != 0) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(unknowns, 0);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.particular[pivot_cols[k]] = m(k, unknowns);
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> kv(unknowns, 0);
    kv[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) kv[pivot_cols[k]] = f.neg(m(k, free));
    sol.kernel.push_back(std::move(kv));
  }
  return sol;
}

}  // namespace grpinv
