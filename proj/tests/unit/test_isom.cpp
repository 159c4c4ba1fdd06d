#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "grpinv/catalog.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/fingerprint.hpp"
#include "grpinv/isom.hpp"

using namespace grpinv;

TEST_CASE("orders of general linear groups") {
  CHECK(general_linear_order(3, 1) == 2);
  CHECK(general_linear_order(3, 2) == 48);
  CHECK(general_linear_order(3, 3) == 11232);
  CHECK(general_linear_order(5, 2) == 480);
  CHECK(general_linear_order(65521, 8) == UINT64_MAX);
}

TEST_CASE("a matrix is isomorphic to itself and to its transforms") {
  std::mt19937_64 rng(12);
  PrimeField f(3);
  for (int trial = 0; trial < 10; ++trial) {
    const LinFormMatrix b = testing::random_skew(f, 3, 2, rng);
    const IsoOutcome self = isomorphic_bruteforce(b, b);
    REQUIRE(self.status == IsoStatus::isomorphic);
    CHECK(verify_witness(b, b, *self.witness));
    const LinFormMatrix c = transform(b, random_invertible(f, 3, rng), random_invertible(f, 2, rng));
    const IsoOutcome o = isomorphic_bruteforce(b, c);
    REQUIRE(o.status == IsoStatus::isomorphic);
    CHECK(verify_witness(b, c, *o.witness));
  }
}

TEST_CASE("one-form matrices of rank 2 and 4 are not isomorphic") {
  PrimeField f(3);
  LinFormMatrix r2(f, 4, 4, 1), r4(f, 4, 4, 1);
  r2.set(0, 0, 1, 1);
  r2.set(0, 1, 0, -1);
  r4 = r2;
  r4.set(0, 2, 3, 1);
  r4.set(0, 3, 2, -1);
  CHECK(isomorphic_bruteforce(r2, r4).status == IsoStatus::non_isomorphic);
  CHECK(isomorphic_bruteforce(r4, r4).status == IsoStatus::isomorphic);
}

TEST_CASE("B1 and B6 are not isomorphic; budget refusals") {
  const LinFormMatrix b1 = four_generator_family()[0].matrix.over(3);
  const LinFormMatrix b6 = four_generator_family()[5].matrix.over(3);
  const IsoOutcome o = isomorphic_bruteforce(b1, b6, 1'000'000'000'000ull);
  CHECK(o.status == IsoStatus::non_isomorphic);
  const IsoOutcome refused = isomorphic_bruteforce(b1, b6, 1000);
  CHECK(refused.status == IsoStatus::budget_exceeded);
  CHECK(refused.required == general_linear_order(3, 4) * general_linear_order(3, 3));
  CHECK_FALSE(refused.witness);
}

TEST_CASE("witness verification") {
  std::mt19937_64 rng(13);
  PrimeField f(5);
  const LinFormMatrix b = testing::random_skew(f, 4, 3, rng);
  const FpMatrix x = random_invertible(f, 4, rng), z = random_invertible(f, 3, rng);
  const LinFormMatrix c = transform(b, x, z);
  CHECK(verify_witness(b, c, {x, z}));
  CHECK_THROWS_AS(verify_witness(b, c, {FpMatrix(f, 4, 4), z}), usage_error);
  const LinFormMatrix b1 = four_generator_family()[0].matrix.over(5);
  const LinFormMatrix b6 = four_generator_family()[5].matrix.over(5);
  for (int t = 0; t < 50; ++t)
    CHECK_FALSE(verify_witness(b1, b6, {random_invertible(f, 4, rng), random_invertible(f, 3, rng)}));
}

TEST_CASE("the witness induces a group isomorphism") {
  std::mt19937_64 rng(14);
  PrimeField f(5);
  const LinFormMatrix b = four_generator_family()[4].matrix.over(5);
  const IsoWitness w{random_invertible(f, 4, rng), random_invertible(f, 3, rng)};
  const LinFormMatrix c = transform(b, w.x, w.z);
  const GroupSpec gb(b), gc(c);
  std::uniform_int_distribution<std::uint64_t> pick(0, 78124);
  for (int t = 0; t < 200; ++t) {
    const auto g = gb.element(pick(rng)), h = gb.element(pick(rng));
    CHECK(map_element(w, gb.mul(g, h)) == gc.mul(map_element(w, g), map_element(w, h)));
  }
}

TEST_CASE("isomorphic implies equal fingerprints on random pairs") {
  std::mt19937_64 rng(15);
  PrimeField f(3);
  std::vector<LinFormMatrix> family;
  for (int i = 0; i < 8; ++i) family.push_back(testing::random_skew(f, 3, 2, rng));
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a; b < family.size(); ++b) {
      const IsoOutcome o = isomorphic_bruteforce(family[a], family[b]);
      if (o.status == IsoStatus::isomorphic) {
        CHECK(verify_witness(family[a], family[b], *o.witness));
        CHECK(fingerprint(family[a]) == fingerprint(family[b]));
      }
      if (fingerprint(family[a]) != fingerprint(family[b])) CHECK(o.status == IsoStatus::non_isomorphic);
    }
}

TEST_CASE("shape checks") {
  PrimeField f(3);
  CHECK_THROWS_AS(isomorphic_bruteforce(LinFormMatrix(f, 3, 3, 2), LinFormMatrix(f, 3, 3, 1)), usage_error);
  CHECK_THROWS_AS(isomorphic_bruteforce(LinFormMatrix(f, 3, 3, 2), LinFormMatrix(PrimeField(5), 3, 3, 2)),
                  usage_error);
}
