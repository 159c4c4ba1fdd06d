#pragma once

// Hilbert series and Hilbert polynomials of R/I for homogeneous ideals I,
// computed from the leading-term ideal of a Groebner basis, plus the
// dimension and degree read off from them.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "grpinv/groebner.hpp"

namespace grpinv {

using Rational = boost::rational<std::int64_t>;

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational operator()(Rational t) const;
  std::string to_string(char var = 't') const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// HS(t) = numerator(t) / (1 - t)^nvars with an integer numerator.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // lowest degree first
  std::size_t nvars = 0;

  /// numerator = (1 - t)^c * reduced with reduced(1) != 0; returns c.
  std::size_t reduce(std::vector<std::int64_t>& reduced) const;
  /// Coefficient of t^s in the power series expansion.
  std::int64_t coefficient(std::size_t s) const;
};

/// Hilbert series of R/M for the monomial ideal M generated by `generators`,
/// by the pivot recursion N(M) = N(M + x_i) + t * N(M : x_i).
HilbertSeries hilbert_series(std::span<const Monomial> generators, std::size_t nvars);

/// Hilbert series of R/I from its leading-term ideal. Computes a Groebner basis
/// when none is attached. Throws usage_error for non-homogeneous generators.
HilbertSeries hilbert_series(const IdealBasis& ideal);

RationalPoly hilbert_poly(const HilbertSeries& series);
RationalPoly hilbert_poly(const IdealBasis& ideal);

/// Dimension of the affine cone V_a(I): 1 + deg HP, 0 when HP = 0, nvars for I = 0.
int affine_dim(const HilbertSeries& series);
int affine_dim(const IdealBasis& ideal);

/// m! times the leading coefficient of HP where m = deg HP; 0 when HP = 0.
std::int64_t ideal_degree(const HilbertSeries& series);
std::int64_t ideal_degree(const IdealBasis& ideal);

}  // namespace grpinv
