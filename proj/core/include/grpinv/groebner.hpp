#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grpinv/poly.hpp"

namespace grpinv {

/// Full multivariate division of f by `basis` in f's ring order.
/// The remainder has no term divisible by any leading monomial of the basis.
Poly reduce(const Poly& f, std::span<const Poly> basis);

Poly s_polynomial(const Poly& f, const Poly& g);

/// True when every S-polynomial of the list reduces to zero against it.
bool is_groebner_basis(std::span<const Poly> basis);

/// True when no leading monomial divides any term of another element and all are monic.
bool is_reduced_basis(std::span<const Poly> basis);

/// A finite generating set of a homogeneous ideal, optionally with its reduced
/// Groebner basis in `ring`'s monomial order.
struct IdealBasis {
  RingPtr ring;
  std::vector<Poly> generators;
  std::optional<std::vector<Poly>> groebner;

  bool is_zero_ideal() const;
  bool is_homogeneous() const;
};

/// Reduced Groebner basis under `order` (the generators are moved into the ring
/// with that order). Buchberger with the coprime and chain criteria, pairs
/// processed by ascending lcm degree.
IdealBasis groebner(const RingPtr& ring, std::vector<Poly> generators,
                    const MonomialOrder& order = MonomialOrder::grevlex());

/// Attaches a Groebner basis if the ideal does not carry one yet.
const std::vector<Poly>& ensure_groebner(IdealBasis& ideal);

/// Ideal equality by reducing each generating set against the other's Groebner basis.
bool ideals_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const RingPtr& ring);

/// Membership test: f reduces to zero against a Groebner basis of the ideal.
bool ideal_contains(const IdealBasis& ideal, const Poly& f);

}  // namespace grpinv
