#include "grpinv/catalog.hpp"

#include <array>
#include <string>

#include "grpinv/errors.hpp"

namespace grpinv {

GenericMatrix::GenericMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), coeffs_(rows * cols * nvars, 0) {
  if (rows == 0 || cols == 0 || nvars == 0) throw usage_error("matrix of linear forms needs positive dimensions");
}

std::int64_t GenericMatrix::coeff(std::size_t k, std::size_t i, std::size_t j) const {
  if (k >= nvars_ || i >= rows_ || j >= cols_) throw usage_error("coefficient index out of range");
  return coeffs_[(k * rows_ + i) * cols_ + j];
}

void GenericMatrix::set(std::size_t k, std::size_t i, std::size_t j, std::int64_t v) {
  if (k >= nvars_ || i >= rows_ || j >= cols_) throw usage_error("coefficient index out of range");
  coeffs_[(k * rows_ + i) * cols_ + j] = v;
}

void GenericMatrix::set_skew(std::size_t k, std::size_t i, std::size_t j, std::int64_t v) {
  if (k == 0 || i == 0 || j == 0) throw usage_error("skew positions are 1-based");
  set(k - 1, i - 1, j - 1, v);
  set(k - 1, j - 1, i - 1, -v);
}

void GenericMatrix::add_omega_slot(OmegaSlot slot) {
  if (slot.k == 0 || slot.i == 0 || slot.j == 0 || slot.k > nvars_ || slot.i > rows_ || slot.j > cols_)
    throw usage_error("omega slot (" + std::to_string(slot.k) + "," + std::to_string(slot.i) + "," +
                      std::to_string(slot.j) + ") out of range");
  omega_.push_back(slot);
}

LinFormMatrix GenericMatrix::over(std::uint32_t p, bool mirror) const {
  PrimeField field(p);
  LinFormMatrix m(field, rows_, cols_, nvars_);
  for (std::size_t k = 0; k < nvars_; ++k)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.set(k, i, j, coeff(k, i, j));
  if (!omega_.empty()) {
    const std::int64_t w = field.primitive_element();
    for (const auto& s : omega_) {
      m.set(s.k - 1, s.i - 1, s.j - 1, w);
      if (mirror) {
        if (s.j > rows_ || s.i > cols_) throw usage_error("mirrored omega slot outside the matrix");
        m.set(s.k - 1, s.j - 1, s.i - 1, -w);
      }
    }
  }
  return m;
}

GenericMatrix GenericMatrix::padded(std::size_t n) const {
  if (rows_ != cols_ || n < rows_) throw usage_error("padding needs a square matrix and a larger size");
  GenericMatrix out(n, n, nvars_);
  for (std::size_t k = 0; k < nvars_; ++k)
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.set(k, i, j, coeff(k, i, j));
  out.omega_ = omega_;
  return out;
}

namespace {

// (i, j, k) upper-triangle entries with coefficient 1; variables x, y, z are k = 1, 2, 3.
GenericMatrix skew4(std::initializer_list<std::array<std::size_t, 3>> entries) {
  GenericMatrix m(4, 4, 3);
  for (const auto& [i, j, k] : entries) m.set_skew(k, i, j, 1);
  return m;
}

}  // namespace

std::vector<NamedMatrix> four_generator_family() {
  std::vector<NamedMatrix> out;
  out.push_back({"B1", skew4({{1, 2, 1}, {1, 3, 2}, {1, 4, 3}})});
  out.push_back({"B2", skew4({{1, 2, 1}, {1, 3, 2}, {2, 3, 3}})});
  out.push_back({"B3", skew4({{1, 2, 1}, {1, 3, 2}, {2, 4, 3}})});
  out.push_back({"B4", skew4({{1, 2, 1}, {1, 3, 2}, {1, 4, 3}, {2, 3, 3}})});
  out.push_back({"B5", skew4({{1, 2, 1}, {1, 4, 2}, {2, 3, 2}, {3, 4, 3}})});
  GenericMatrix b6 = skew4({{1, 2, 1}, {1, 3, 2}, {1, 4, 3}, {3, 4, 1}});
  b6.add_omega_slot({2, 2, 4});
  out.push_back({"B6", std::move(b6)});
  return out;
}

std::vector<NamedMatrix> padded_family() {
  std::vector<NamedMatrix> out;
  int row = 1;
  for (auto& [name, m] : four_generator_family()) out.push_back({"T" + std::to_string(row++), m.padded(5)});
  return out;
}

NamedMatrix lee_matrix() {
  GenericMatrix m(5, 5, 3);
  m.set_skew(1, 1, 4, 1);
  m.set_skew(2, 1, 5, 1);
  m.set_skew(3, 2, 4, 1);
  m.set_skew(1, 2, 5, 1);
  m.set_skew(2, 3, 4, 2);
  m.set_skew(3, 3, 5, 1);
  return {"Lee", std::move(m)};
}

NamedMatrix nongeneric_matrix() {
  GenericMatrix m(3, 3, 3);
  m.set(0, 0, 0, 1);
  m.set(2, 0, 1, 1);
  m.set(1, 0, 2, 1);
  m.set(1, 1, 1, 1);
  m.set(2, 2, 2, 1);
  return {"N", std::move(m)};
}

}  // namespace grpinv
