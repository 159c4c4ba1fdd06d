#include "grpinv/ideals.hpp"

#include <bit>
#include <map>
#include <set>

namespace grpinv {

namespace {

class MinorTable {
 public:
  MinorTable(const LinFormMatrix& d, RingPtr ring) : d_(d), ring_(std::move(ring)) {
    if (d.rows() > 31 || d.cols() > 31) throw usage_error("matrix too large for minor enumeration");
  }

  const Poly& minor(std::uint32_t rows, std::uint32_t cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly value = compute(rows, cols);
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  Poly compute(std::uint32_t rows, std::uint32_t cols) {
    const int r0 = std::countr_zero(rows);
    if (std::popcount(rows) == 1) return d_.entry(ring_, r0, std::countr_zero(cols));
    const std::uint32_t rest_rows = rows & (rows - 1);
    Poly acc(ring_);
    std::size_t pos = 0;
    for (std::uint32_t c = cols; c != 0; c &= c - 1, ++pos) {
      const int col = std::countr_zero(c);
      Poly e = d_.entry(ring_, r0, col);
      if (e.is_zero()) continue;
      const Poly& sub = minor(rest_rows, cols & ~(1u << col));
      if (sub.is_zero()) continue;
      if (pos % 2 == 0) acc += e * sub;
      else acc -= e * sub;
    }
    return acc;
  }

  const LinFormMatrix& d_;
  RingPtr ring_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> memo_;
};

/// Fixed-popcount subsets of {0..n-1} in increasing numeric (= colex) order.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  std::uint32_t s = k == 0 ? 0 : (1u << k) - 1;
  const std::uint64_t limit = 1ull << n;
  while (s < limit) {
    out.push_back(s);
    if (s == 0) break;
    // Gosper's hack
    const std::uint32_t c = s & (~s + 1);
    const std::uint64_t r = std::uint64_t(s) + c;
    s = static_cast<std::uint32_t>((((r ^ s) >> 2) / c) | r);
    if (r >= limit) break;
  }
  return out;
}

std::vector<Poly> collect_minors(MinorTable& table, const LinFormMatrix& d, std::size_t k) {
  if (k == 0 || k > std::min(d.rows(), d.cols())) throw usage_error("minor size out of range");
  const bool skew = d.is_skew_symmetric();
  std::vector<Poly> out;
  std::set<std::vector<Term>> seen;
  const auto rsets = subsets(d.rows(), k);
  const auto csets = subsets(d.cols(), k);
  for (auto c : csets)
    for (auto r : rsets) {
      if (skew && r > c) continue;
      const Poly& m = table.minor(r, c);
      if (m.is_zero()) continue;
      if (!seen.insert(m.monic().terms()).second) continue;
      out.push_back(m);
    }
  return out;
}

}  // namespace

std::vector<Poly> minors(const LinFormMatrix& d, std::size_t k, const RingPtr& ring) {
  if (ring->nvars() != d.nvars() || !(ring->field() == d.field()))
    throw usage_error("ring does not match the matrix");
  MinorTable table(d, ring);
  return collect_minors(table, d, k);
}

std::vector<Poly> minors(const LinFormMatrix& d, std::size_t k) {
  return minors(d, k, make_ring(d.field(), d.nvars(), "z"));
}

Poly determinant(const LinFormMatrix& d, const RingPtr& ring) {
  if (!d.square()) throw usage_error("determinant of a non-square matrix");
  if (d.rows() == 0) return Poly::constant(ring, 1);
  MinorTable table(d, ring);
  const std::uint32_t all = d.rows() == 32 ? ~0u : (1u << d.rows()) - 1;
  return table.minor(all, all);
}

RankIdealVector::RankIdealVector(const LinFormMatrix& d, std::string prefix)
    : ring_(make_ring(d.field(), d.nvars(), std::move(prefix))) {
  MinorTable table(d, ring_);
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    auto e = std::make_unique<Entry>();
    e->generators = collect_minors(table, d, k);
    entries_.push_back(std::move(e));
  }
}

const RankIdealVector::Entry& RankIdealVector::entry(std::size_t k) const {
  if (k == 0 || k > entries_.size()) throw usage_error("rank ideal index out of range");
  return *entries_[k - 1];
}

const std::vector<Poly>& RankIdealVector::generators(std::size_t k) const { return entry(k).generators; }

const IdealBasis& RankIdealVector::ideal(std::size_t k) const {
  const Entry& e = entry(k);
  std::call_once(e.once, [&] {
    e.basis = groebner(ring_, e.generators);
    e.series = hilbert_series(*e.basis);
  });
  return *e.basis;
}

const HilbertSeries& RankIdealVector::hilbert(std::size_t k) const {
  ideal(k);
  return *entry(k).series;
}

int RankIdealVector::affine_dim(std::size_t k) const { return grpinv::affine_dim(hilbert(k)); }

std::int64_t RankIdealVector::degree(std::size_t k) const { return ideal_degree(hilbert(k)); }

}  // namespace grpinv
