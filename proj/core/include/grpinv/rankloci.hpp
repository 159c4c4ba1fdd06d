#pragma once

// Exhaustive enumeration of F_p-points of the rank loci of a matrix of linear
// forms: how many v in F_p^d give rank(D(v)) = r, and the F_p-span of each
// locus V_a(I_k) = {v : rank D(v) < k}.

#include <cstdint>
#include <vector>

#include "grpinv/linforms.hpp"

namespace grpinv {

struct RankProfile {
  std::uint32_t p = 0;
  std::size_t nvars = 0;
  /// counts[r] = #{v in F_p^d : rank D(v) = r}, r = 0..N.
  std::vector<std::uint64_t> counts;
  /// span_dims[k-1] = dim <V_a(I_k)(F_p)>, k = 1..N. Empty when spans were not requested.
  std::vector<std::size_t> span_dims;

  std::size_t max_rank() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  /// n_p(I_k) = sum_{r < k} counts[r].
  std::uint64_t points(std::size_t k) const;
  /// n_p(I_k) for k = 1..N.
  std::vector<std::uint64_t> chain() const;
  std::uint64_t total() const;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000'000;

struct EnumerationOptions {
  /// Refuse when p^d exceeds this many points.
  std::uint64_t budget = kDefaultPointBudget;
  /// 0 selects default_thread_count().
  unsigned threads = 0;
  /// Enumerate one point per line through the origin and weight by p - 1.
  bool projective = true;
  bool spans = true;
  /// Odometer steps per work item.
  std::uint64_t chunk_size = 1u << 14;
};

/// GRPINV_THREADS when set to a positive integer, else the hardware concurrency.
unsigned default_thread_count();

/// Throws budget_exceeded when p^d > options.budget.
RankProfile rank_profile(const LinFormMatrix& d, const EnumerationOptions& options = {});
/// Same, insisting that D lives over F_p.
RankProfile rank_profile(const LinFormMatrix& d, std::uint32_t p, const EnumerationOptions& options = {});

/// Rank profile of the adjoint B^bullet, i.e. the breadth data of G_B.
RankProfile adjoint_rank_profile(const LinFormMatrix& b, const EnumerationOptions& options = {});

/// (n_p(I_1), ..., n_p(I_N)); nondecreasing.
std::vector<std::uint64_t> chain_counts(const LinFormMatrix& d, const EnumerationOptions& options = {});

}  // namespace grpinv
