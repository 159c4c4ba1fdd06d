#pragma once

// Isomorphism invariants of G_B assembled into a comparable vector, and the
// partition of a family of matrices by exact fingerprint equality.
//
// Invariant names: np<k>, dim<k>, deg<k>, span<k> for I_k(B) (rational point
// count, affine dimension, degree, dimension of the span of the F_p-points);
// the same with suffix "adj" for I_k(B^bullet); "derived" for the dimension of
// the derived subgroup. Per-prime coordinates are named "p<p>:<invariant>";
// "n" and "d" are prime independent.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpinv/catalog.hpp"
#include "grpinv/linforms.hpp"
#include "grpinv/rankloci.hpp"

namespace grpinv {

struct InvariantSpec {
  enum class Kind { points, dimension, degree, span, derived };
  Kind kind;
  std::size_t index = 0;  // k, unused for derived
  bool adjoint = false;

  std::string name() const;
  friend bool operator==(const InvariantSpec&, const InvariantSpec&) = default;
};

/// Throws usage_error for unknown names.
InvariantSpec parse_invariant(const std::string& name);

/// Every invariant for an n x n matrix in d variables: the four per-ideal
/// invariants for I_1..I_n, then for the adjoint ideals I_1..I_min(n,d), then derived.
std::vector<std::string> default_invariants(std::size_t n, std::size_t d);

struct FingerprintOptions {
  std::vector<std::uint32_t> primes{3, 5, 7};
  /// Empty selects default_invariants(n, d).
  std::vector<std::string> invariants;
  std::uint64_t budget = kDefaultPointBudget;
  /// Threads for the enumeration kernel (0: default_thread_count()).
  unsigned threads = 0;
};

struct Fingerprint {
  /// (coordinate name, value); nullopt marks an invariant that was not
  /// computed (budget exceeded or index beyond the matrix size).
  std::vector<std::pair<std::string, std::optional<std::int64_t>>> coords;

  std::optional<std::int64_t> get(const std::string& name) const;
  bool has(const std::string& name) const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// Fingerprint of a skew-symmetric B over its own field; options.primes is ignored.
Fingerprint fingerprint(const LinFormMatrix& b, const FingerprintOptions& options = {});
/// Fingerprint of a prime-generic matrix at every prime in options.primes.
Fingerprint fingerprint(const GenericMatrix& b, const FingerprintOptions& options = {});

struct PartitionReport {
  std::vector<std::string> labels;
  std::vector<Fingerprint> fingerprints;  // parallel to labels
  /// Classes ordered by fingerprint; labels sorted within each class.
  std::vector<std::vector<std::string>> classes;
  /// Coordinate names, chosen greedily, that already separate every pair of classes.
  std::vector<std::string> separating;

  std::size_t class_count() const noexcept { return classes.size(); }
};

/// Matrix of a family member at a given prime.
using MatrixSource = std::function<LinFormMatrix(std::uint32_t p)>;

/// Members must share (n, d); fingerprints are computed in parallel.
PartitionReport partition(const std::vector<std::pair<std::string, MatrixSource>>& family,
                          const FingerprintOptions& options = {});
PartitionReport partition(const std::vector<NamedMatrix>& family, const FingerprintOptions& options = {});
/// Single-prime family; all matrices must live over the same field.
PartitionReport partition(const std::vector<std::pair<std::string, LinFormMatrix>>& family,
                          const FingerprintOptions& options = {});

/// Greedy set cover: coordinates that separate the same classes as the full fingerprints.
std::vector<std::string> separating_subset(const std::vector<Fingerprint>& fingerprints);

}  // namespace grpinv
