#include "grpinv/gf.hpp"

#include <ostream>
#include <string>

namespace grpinv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= kMaxModulus || !is_prime(p))
    throw usage_error("modulus must be an odd prime below 65536, got " + std::to_string(p));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw division_by_zero();
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

std::uint64_t PrimeField::order(Residue a) const {
  if (a % p_ == 0) throw division_by_zero();
  std::uint64_t n = p_ - 1;
  std::uint64_t ord = n;
  // Strip prime factors of p-1 while a^(ord/q) stays 1.
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
  }
  return ord;
}

Residue PrimeField::primitive_element() const {
  for (Residue g = 1; g < p_; ++g)
    if (order(g) == p_ - 1) return g;
  return 0;  // unreachable for prime p
}

Residue primitive_element(std::uint32_t p) { return PrimeField(p).primitive_element(); }

Fp PrimeField::element(std::int64_t v) const { return Fp(reduce(v), p_); }
Fp PrimeField::zero() const { return Fp(0, p_); }
Fp PrimeField::one() const { return Fp(1, p_); }

namespace {

void check_same(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus())
    throw usage_error("mixed moduli: " + std::to_string(a.modulus()) + " and " +
                      std::to_string(b.modulus()));
}

}  // namespace

Fp Fp::operator-() const { return Fp(value_ == 0 ? 0 : p_ - value_, p_); }

Fp Fp::inv() const { return Fp(field().inv(value_), p_); }

Fp operator+(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field().add(a.value_, b.value_), a.p_);
}

Fp operator-(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field().sub(a.value_, b.value_), a.p_);
}

Fp operator*(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field().mul(a.value_, b.value_), a.p_);
}

Fp operator/(const Fp& a, const Fp& b) {
  check_same(a, b);
  return a * b.inv();
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

std::vector<Residue> inverse_table(const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  std::vector<Residue> table(p, 0);
  table[1] = 1;
  // inv(i) = -(p / i) * inv(p mod i)
  for (std::uint32_t i = 2; i < p; ++i)
    table[i] = field.mul(p - p / i, table[p % i]);
  return table;
}

}  // namespace grpinv
