#pragma once

// The class-2, exponent-p group G_B(F_p) on V x W = F_p^n x F_p^d with
//   (v, w) * (v', w') = (v + v', w + w' + t(v, v') / 2),
// where t(v, v')_k = v^T B^(k) v'.

#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "grpinv/linforms.hpp"

namespace grpinv {

struct GroupElement {
  std::vector<Residue> v;
  std::vector<Residue> w;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
 public:
  /// B must be square and skew-symmetric.
  explicit GroupSpec(LinFormMatrix b);

  const LinFormMatrix& matrix() const noexcept { return b_; }
  const PrimeField& field() const noexcept { return b_.field(); }
  std::size_t n() const noexcept { return b_.rows(); }
  std::size_t d() const noexcept { return b_.nvars(); }

  GroupElement identity() const;
  /// (e_i, 0) for i < n, then (0, f_k).
  GroupElement generator(std::size_t index) const;
  /// Element number `index` in a fixed enumeration of all p^(n+d) elements.
  GroupElement element(std::uint64_t index) const;
  std::uint64_t order_exponent() const noexcept { return n() + d(); }

  std::vector<Residue> t_map(std::span<const Residue> v, std::span<const Residue> v2) const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, std::uint64_t e) const;
  /// [g, h] = g^-1 h^-1 g h.
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;

 private:
  void check(const GroupElement& g) const;

  LinFormMatrix b_;
  Residue half_;
};

/// B with B^(k)_ij = c and B^(k)_ji = -c for every (i, j, k, c), 1-based, i < j.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  std::int64_t coeff;
};
LinFormMatrix matrix_from_structure_constants(std::uint32_t p, std::size_t n, std::size_t d,
                                              std::span<const StructureConstant> constants);

/// Reads B back from the group through commutators of the standard generators.
LinFormMatrix matrix_from_group(const GroupSpec& group);

struct StructuralReport {
  std::uint64_t order_exponent = 0;  // |G| = p^order_exponent
  int nilpotency_class = 0;          // 0 trivial, 1 abelian, 2 otherwise
  int derived_dim = 0;               // d - dim V_a(I_1(B))
  int centre_dim = 0;                // d + dim V_a(I_1(B^bullet))

  struct Enumeration {
    int derived_dim = 0;
    int centre_dim = 0;
    bool exponent_p = false;
    bool class_at_most_2 = false;
  };
  /// Present when p^(n+d) fits the enumeration budget.
  std::optional<Enumeration> enumerated;

  bool consistent() const {
    return !enumerated || (enumerated->derived_dim == derived_dim && enumerated->centre_dim == centre_dim &&
                           enumerated->exponent_p && enumerated->class_at_most_2);
  }
};

inline constexpr std::uint64_t kDefaultElementBudget = 1'000'000;

/// Ideal-theoretic structure data, cross-checked by brute-force enumeration of
/// the group when it has at most `element_budget` elements.
StructuralReport structural_report(const GroupSpec& group,
                                   std::uint64_t element_budget = kDefaultElementBudget);

/// Brute-force part of the report alone (throws budget_exceeded when too large).
StructuralReport::Enumeration enumerate_structure(const GroupSpec& group,
                                                  std::uint64_t element_budget = kDefaultElementBudget);

}  // namespace grpinv
