#pragma once

// Arithmetic in prime fields F_p for odd p < 2^16.
//
// Scalars travel either as plain residues (std::uint32_t in [0, p)) together
// with a PrimeField context, which is what the dense kernels use, or as Fp
// values that remember their modulus and refuse to mix with other fields.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "grpinv/errors.hpp"

namespace grpinv {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

class Fp;

class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  /// Throws usage_error unless p is an odd prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Throws division_by_zero for a == 0.
  Residue inv(Residue a) const;

  /// Smallest positive integer generating the multiplicative group.
  Residue primitive_element() const;
  /// Multiplicative order of a nonzero residue.
  std::uint64_t order(Residue a) const;

  Fp element(std::int64_t v) const;
  Fp zero() const;
  Fp one() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

Residue primitive_element(std::uint32_t p);

/// Field element that carries its modulus; mixing moduli throws usage_error.
class Fp {
 public:
  Fp(Residue value, std::uint32_t p) : value_(value), p_(p) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  Fp operator-() const;
  Fp inv() const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  Residue value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

/// Table of inverses for all residues (index 0 holds 0). Used by hot loops.
std::vector<Residue> inverse_table(const PrimeField& field);

}  // namespace grpinv
