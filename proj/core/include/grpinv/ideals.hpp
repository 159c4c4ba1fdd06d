#pragma once

// Determinantal ideals I_k(D) generated by the k x k minors of a matrix of
// linear forms, and the ideal rank vector (I_1, ..., I_N), N = min(m, n).

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "grpinv/hilbert.hpp"
#include "grpinv/linforms.hpp"

namespace grpinv {

/// Nonzero k x k minors, row/column subsets in colex order. Minors equal up to
/// a nonzero scalar are kept once; for skew-symmetric input only the minor of
/// (R, C) with R <= C is formed, since det D[C,R] = (-1)^k det D[R,C].
std::vector<Poly> minors(const LinFormMatrix& d, std::size_t k, const RingPtr& ring);
std::vector<Poly> minors(const LinFormMatrix& d, std::size_t k);

/// Determinant of a square matrix of linear forms as a polynomial.
Poly determinant(const LinFormMatrix& d, const RingPtr& ring);

class RankIdealVector {
 public:
  explicit RankIdealVector(const LinFormMatrix& d, std::string prefix = "z");

  const RingPtr& ring() const noexcept { return ring_; }
  /// N = min(rows, cols).
  std::size_t size() const noexcept { return entries_.size(); }

  /// Generators of I_k, 1 <= k <= size().
  const std::vector<Poly>& generators(std::size_t k) const;
  /// I_k with its reduced grevlex Groebner basis; computed once, thread-safe.
  const IdealBasis& ideal(std::size_t k) const;
  const HilbertSeries& hilbert(std::size_t k) const;

  int affine_dim(std::size_t k) const;
  std::int64_t degree(std::size_t k) const;

 private:
  struct Entry {
    std::vector<Poly> generators;
    mutable std::once_flag once;
    mutable std::optional<IdealBasis> basis;
    mutable std::optional<HilbertSeries> series;
  };
  const Entry& entry(std::size_t k) const;

  RingPtr ring_;
  std::vector<std::unique_ptr<Entry>> entries_;
};

}  // namespace grpinv
