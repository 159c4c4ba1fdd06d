#pragma once

// Exhaustive isomorphism test for small class-2 exponent-p groups: G_B and G_C
// are isomorphic iff X B(yZ) X^T = C(y) for some X in GL_n(F_p), Z in GL_d(F_p).

#include <cstdint>
#include <optional>

#include "grpinv/groups.hpp"
#include "grpinv/linforms.hpp"

namespace grpinv {

struct IsoWitness {
  FpMatrix x;  // n x n
  FpMatrix z;  // d x d
};

enum class IsoStatus { isomorphic, non_isomorphic, budget_exceeded };

struct IsoOutcome {
  IsoStatus status = IsoStatus::non_isomorphic;
  std::optional<IsoWitness> witness;  // set iff isomorphic
  std::uint64_t required = 0;         // |GL_n| * |GL_d| (saturating)
};

inline constexpr std::uint64_t kDefaultIsoBudget = 100'000'000;

/// |GL_n(F_p)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(std::uint32_t p, std::size_t n);

/// Searches X row by row over nonsingular prefixes, pruning with the linear
/// conditions on Z from the already fixed block of X B X^T, and solves for Z.
/// Refuses (budget_exceeded) when |GL_n| * |GL_d| > budget. Deterministic for
/// any thread count.
IsoOutcome isomorphic_bruteforce(const LinFormMatrix& b, const LinFormMatrix& c,
                                 std::uint64_t budget = kDefaultIsoBudget, unsigned threads = 0);

/// Checks X B(yZ) X^T = C(y) and X B^bullet(xX) Z^T = C^bullet(x) slice by slice.
/// Throws usage_error on shape mismatch or singular X or Z.
bool verify_witness(const LinFormMatrix& b, const LinFormMatrix& c, const IsoWitness& w);

/// The group isomorphism G_B -> G_C induced by a witness: (v, w) -> (X^-T v, Z w).
GroupElement map_element(const IsoWitness& w, const GroupElement& g);

}  // namespace grpinv
