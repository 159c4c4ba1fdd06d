#include <doctest.h>

#include "grpinv/errors.hpp"
#include "grpinv/gf.hpp"

using namespace grpinv;

TEST_CASE("prime field construction") {
  CHECK(PrimeField(3).modulus() == 3);
  CHECK_THROWS_AS(PrimeField(2), usage_error);
  CHECK_THROWS_AS(PrimeField(9), usage_error);
  CHECK_THROWS_AS(PrimeField(1), usage_error);
  CHECK_THROWS_AS(PrimeField(65537), usage_error);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65523));
}

TEST_CASE("arithmetic agrees with integer arithmetic mod p") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 37u, 65521u}) {
    PrimeField f(p);
    for (std::int64_t a = -40; a <= 40; a += 7) {
      for (std::int64_t b = -33; b <= 33; b += 5) {
        const auto ra = f.reduce(a), rb = f.reduce(b);
        const auto mod = [&](std::int64_t x) { return static_cast<Residue>(((x % p) + p) % p); };
        CHECK(f.add(ra, rb) == mod(a + b));
        CHECK(f.sub(ra, rb) == mod(a - b));
        CHECK(f.mul(ra, rb) == mod(a * b));
      }
    }
  }
}

TEST_CASE("inverses and division by zero") {
  for (std::uint32_t p : {3u, 5u, 7u, 37u}) {
    PrimeField f(p);
    for (Residue a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), division_by_zero);
    const auto table = inverse_table(f);
    for (Residue a = 1; a < p; ++a) CHECK(table[a] == f.inv(a));
  }
}

TEST_CASE("primitive element is the smallest generator") {
  CHECK(primitive_element(3) == 2);
  CHECK(primitive_element(5) == 2);
  CHECK(primitive_element(7) == 3);
  CHECK(primitive_element(11) == 2);
  CHECK(primitive_element(13) == 2);
  CHECK(primitive_element(37) == 2);
  CHECK(primitive_element(41) == 6);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 41u}) {
    PrimeField f(p);
    const Residue w = f.primitive_element();
    CHECK(f.order(w) == p - 1);
    for (Residue a = 1; a < w; ++a) CHECK(f.order(a) < p - 1);
  }
}

TEST_CASE("Fp value type") {
  PrimeField f(7);
  Fp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == f.mul(3, f.inv(5)));
  CHECK((-a).value() == 4);
  CHECK_THROWS_AS(a / Fp(0, 7), division_by_zero);
  CHECK_THROWS_AS(a + Fp(1, 5), usage_error);
}
