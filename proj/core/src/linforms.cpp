#include "grpinv/linforms.hpp"

#include <map>
#include <sstream>

namespace grpinv {

// ------------------------------------------------------------ LinFormMatrix

LinFormMatrix::LinFormMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::size_t nvars)
    : field_(field), rows_(rows), cols_(cols), slices_(nvars, FpMatrix(field, rows, cols)) {}

LinFormMatrix::LinFormMatrix(std::vector<FpMatrix> slices)
    : field_(slices.empty() ? throw usage_error("matrix of linear forms needs at least one slice")
                            : slices.front().field()),
      rows_(slices.front().rows()),
      cols_(slices.front().cols()),
      slices_(std::move(slices)) {
  for (const auto& s : slices_)
    if (!(s.field() == field_) || s.rows() != rows_ || s.cols() != cols_)
      throw usage_error("slices must share field and shape");
}

bool LinFormMatrix::is_zero() const noexcept {
  for (const auto& s : slices_)
    if (!s.is_zero()) return false;
  return true;
}

bool LinFormMatrix::is_skew_symmetric() const noexcept {
  if (!square()) return false;
  for (const auto& s : slices_)
    if (!s.is_skew_symmetric()) return false;
  return true;
}

Poly LinFormMatrix::entry(const RingPtr& ring, std::size_t i, std::size_t j) const {
  if (ring->nvars() != nvars()) throw usage_error("ring has the wrong number of variables");
  std::vector<Residue> coeffs(nvars());
  for (std::size_t k = 0; k < nvars(); ++k) coeffs[k] = slices_[k](i, j);
  return Poly::linear(ring, coeffs);
}

std::string LinFormMatrix::to_string(const std::string& prefix) const {
  RingPtr ring = make_ring(field_, nvars(), prefix);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << entry(ring, i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMatrix evaluate(const LinFormMatrix& d, std::span<const Residue> v) {
  if (v.size() != d.nvars()) throw usage_error("evaluation point has wrong length");
  FpMatrix out(d.field(), d.rows(), d.cols());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out += d.slice(k).scaled(v[k]);
  return out;
}

LinFormMatrix substitute_and_multiply(const LinFormMatrix& d, const FpMatrix& left,
                                      const FpMatrix& subst, const FpMatrix& right) {
  const auto& f = d.field();
  if (!subst.square() || subst.rows() != d.nvars())
    throw usage_error("substitution matrix must be square of size nvars");
  if (left.cols() != d.rows() || right.rows() != d.cols()) throw usage_error("shape mismatch");
  std::vector<FpMatrix> slices;
  slices.reserve(d.nvars());
  for (std::size_t l = 0; l < d.nvars(); ++l) {
    FpMatrix combo(f, d.rows(), d.cols());
    for (std::size_t k = 0; k < d.nvars(); ++k)
      if (subst(l, k) != 0) combo += d.slice(k).scaled(subst(l, k));
    slices.push_back(left * combo * right);
  }
  return LinFormMatrix(std::move(slices));
}

LinFormMatrix transform(const LinFormMatrix& b, const FpMatrix& x, const FpMatrix& z) {
  if (!x.square() || x.rows() != b.rows() || !b.square()) throw usage_error("X must be n x n");
  if (!z.square() || z.rows() != b.nvars()) throw usage_error("Z must be d x d");
  if (!x.invertible() || !z.invertible()) throw usage_error("transformation matrices must be invertible");
  return substitute_and_multiply(b, x, z, x.transpose());
}

LinFormMatrix adjoint(const LinFormMatrix& b) {
  if (!b.square()) throw usage_error("adjoint needs a square matrix");
  const std::size_t n = b.rows();
  const std::size_t d = b.nvars();
  LinFormMatrix out(b.field(), n, d, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < d; ++k) out.set(j, i, k, b.coeff(k, i, j));
  return out;
}

namespace {

Poly pfaffian_rec(const LinFormMatrix& b, const RingPtr& ring, std::uint32_t mask,
                  std::map<std::uint32_t, Poly>& memo) {
  if (mask == 0) return Poly::constant(ring, 1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (mask & (1u << i)) idx.push_back(i);
  const std::size_t first = idx.front();
  Poly acc(ring);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    Poly entry = b.entry(ring, first, idx[t]);
    if (entry.is_zero()) continue;
    std::uint32_t rest = mask & ~(1u << first) & ~(1u << idx[t]);
    Poly term = entry * pfaffian_rec(b, ring, rest, memo);
    if (t % 2 == 1) acc += term;
    else acc -= term;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Poly pfaffian(const LinFormMatrix& b, const RingPtr& ring) {
  if (!b.is_skew_symmetric()) throw usage_error("Pfaffian needs a skew-symmetric matrix");
  if (b.rows() % 2 != 0) throw usage_error("Pfaffian needs even size");
  if (b.rows() > 30) throw usage_error("matrix too large for Pfaffian expansion");
  std::map<std::uint32_t, Poly> memo;
  return pfaffian_rec(b, ring, (1u << b.rows()) - 1, memo);
}

Poly pfaffian(const LinFormMatrix& b) { return pfaffian(b, make_ring(b.field(), b.nvars(), "y")); }

// ------------------------------------------------------------------ Tensor3

Tensor3::Tensor3(PrimeField field, std::size_t r, std::size_t s, std::size_t t)
    : field_(field), r_(r), s_(s), t_(t), a_(r * s * t, 0) {}

Tensor3 Tensor3::from_third_flattening(const LinFormMatrix& b) {
  Tensor3 t(b.field(), b.rows(), b.cols(), b.nvars());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < b.nvars(); ++k) t(i, j, k) = b.coeff(k, i, j);
  return t;
}

std::size_t Tensor3::dim(std::size_t axis) const {
  switch (axis) {
    case 1: return r_;
    case 2: return s_;
    case 3: return t_;
    default: throw usage_error("tensor axis must be 1, 2 or 3");
  }
}

bool Tensor3::is_skew() const noexcept {
  if (r_ != s_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < s_; ++j)
      for (std::size_t k = 0; k < t_; ++k)
        if ((*this)(i, j, k) != field_.neg((*this)(j, i, k))) return false;
  return true;
}

LinFormMatrix flatten(const Tensor3& t, int axis) {
  const std::size_t r = t.dim(1), s = t.dim(2), u = t.dim(3);
  switch (axis) {
    case 1: {
      LinFormMatrix m(t.field(), s, u, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
          for (std::size_t k = 0; k < u; ++k) m.set(i, j, k, t(i, j, k));
      return m;
    }
    case 2: {
      LinFormMatrix m(t.field(), r, u, s);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
          for (std::size_t k = 0; k < u; ++k) m.set(j, i, k, t(i, j, k));
      return m;
    }
    case 3: {
      LinFormMatrix m(t.field(), r, s, u);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
          for (std::size_t k = 0; k < u; ++k) m.set(k, i, j, t(i, j, k));
      return m;
    }
    default:
      throw usage_error("flattening axis must be 1, 2 or 3");
  }
}

Tensor3 act(const Tensor3& t, const FpMatrix& a1, const FpMatrix& a2, const FpMatrix& a3) {
  const std::size_t r = t.dim(1), s = t.dim(2), u = t.dim(3);
  const FpMatrix* mats[3] = {&a1, &a2, &a3};
  const std::size_t dims[3] = {r, s, u};
  for (int m = 0; m < 3; ++m) {
    if (!mats[m]->square() || mats[m]->rows() != dims[m]) throw usage_error("action matrix has wrong shape");
    if (!mats[m]->invertible()) throw usage_error("action matrices must be invertible");
  }
  const auto& f = t.field();
  // Mode products one axis at a time.
  Tensor3 t1(f, r, s, u);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t i = 0; i < r; ++i) {
      const Residue c = a1(l, i);
      if (c == 0) continue;
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < u; ++k) t1(l, j, k) = f.add(t1(l, j, k), f.mul(c, t(i, j, k)));
    }
  Tensor3 t2(f, r, s, u);
  for (std::size_t m = 0; m < s; ++m)
    for (std::size_t j = 0; j < s; ++j) {
      const Residue c = a2(m, j);
      if (c == 0) continue;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < u; ++k) t2(i, m, k) = f.add(t2(i, m, k), f.mul(c, t1(i, j, k)));
    }
  Tensor3 t3(f, r, s, u);
  for (std::size_t n = 0; n < u; ++n)
    for (std::size_t k = 0; k < u; ++k) {
      const Residue c = a3(n, k);
      if (c == 0) continue;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) t3(i, j, n) = f.add(t3(i, j, n), f.mul(c, t2(i, j, k)));
    }
  return t3;
}

}  // namespace grpinv
