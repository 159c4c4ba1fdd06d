#pragma once

// Sparse multivariate polynomials over F_p.
//
// A Poly keeps its terms sorted strictly descending in the monomial order of
// its ring, with no zero coefficients. The ring is shared and immutable.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpinv/gf.hpp"

namespace grpinv {

class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  /// Storage order only (lexicographic on exponent vectors); not a term order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.begin() + a.nvars_,
                                                  b.exps_.begin(), b.exps_.begin() + b.nvars_);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

enum class OrderKind { grevlex, lex };

/// A term order: grevlex or lex after reading variables in `permutation` order.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation = {});

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  /// Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t var(std::size_t i) const noexcept { return perm_.empty() ? i : perm_[i]; }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> perm_;
};

class PolyRing {
 public:
  PolyRing(PrimeField field, std::size_t nvars, std::string prefix = "z",
           MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::string& prefix() const noexcept { return prefix_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::string variable_name(std::size_t i) const;

  /// Same coefficients and variables; order and names may differ.
  bool compatible(const PolyRing& other) const noexcept {
    return field_ == other.field_ && nvars_ == other.nvars_;
  }
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.compatible(b) && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::string prefix_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::size_t nvars, std::string prefix = "z",
                  MonomialOrder order = MonomialOrder::grevlex());
RingPtr make_ring(const PrimeField& field, std::size_t nvars, std::string prefix = "z",
                  MonomialOrder order = MonomialOrder::grevlex());
/// Same field and variables with a different term order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial mono;
  Residue coeff;
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

class Poly {
 public:
  explicit Poly(RingPtr ring);
  /// Terms may be unsorted and repeated; they are combined and sorted.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, std::int64_t c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, Residue c = 1);
  /// Linear form sum_i coeffs[i] * z_i.
  static Poly linear(RingPtr ring, std::span<const Residue> coeffs);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (size() == 1 && terms_[0].mono.is_one()); }

  /// Leading term under the ring's order; requires a nonzero polynomial.
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  Residue leading_coeff() const { return leading().coeff; }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Poly monic() const;
  Poly scaled(Residue c) const;
  Poly times_term(const Monomial& m, Residue c) const;
  /// this - c*m*g, computed by a single merge.
  Poly minus_term_times(const Monomial& m, Residue c, const Poly& g) const;

  Residue evaluate(std::span<const Residue> point) const;
  /// Replace z_i by images[i] (all in the target ring).
  Poly substitute(std::span<const Poly> images) const;
  /// Same polynomial, reordered for a compatible ring.
  Poly in_ring(const RingPtr& target) const;

  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(std::int64_t c, const Poly& f);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_ring(const Poly& other) const;
  Poly combine(const Poly& other, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace grpinv
