#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "grpinv/catalog.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/groups.hpp"

using namespace grpinv;

TEST_CASE("group law of G_B") {
  const GroupSpec g(four_generator_family()[0].matrix.over(5));
  CHECK(g.order_exponent() == 7);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(0, 78124);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
    CHECK(g.power(a, 5) == g.identity());
    // [g, h] = (0, t(v_g, v_h)).
    const auto comm = g.commutator(a, b);
    CHECK(comm.v == std::vector<Residue>(4, 0));
    CHECK(comm.w == g.t_map(a.v, b.v));
  }
  CHECK_THROWS_AS(GroupSpec(nongeneric_matrix().matrix.over(5)), usage_error);
}

TEST_CASE("structure constants round-trip through commutators") {
  const std::vector<StructureConstant> sc{{1, 2, 1, 1}, {1, 3, 2, 1}, {2, 4, 3, 2}};
  const LinFormMatrix b = matrix_from_structure_constants(7, 4, 3, sc);
  CHECK(b.is_skew_symmetric());
  CHECK(b.coeff(2, 1, 3) == 2);
  CHECK(b.coeff(2, 3, 1) == 5);
  CHECK(matrix_from_group(GroupSpec(b)) == b);
  const std::vector<StructureConstant> dup{{1, 2, 1, 1}, {1, 2, 1, 2}};
  CHECK_THROWS_AS(matrix_from_structure_constants(7, 4, 3, dup), usage_error);
}

TEST_CASE("structural reports of the four-generator family") {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto& [name, m] : four_generator_family()) {
      CAPTURE(name);
      const StructuralReport r = structural_report(GroupSpec(m.over(p)));
      CHECK(r.order_exponent == 7);
      CHECK(r.nilpotency_class == 2);
      CHECK(r.derived_dim == 3);
      if (p == 3) {
        REQUIRE(r.enumerated);
        CHECK(r.consistent());
      }
    }
  }
  // Padding adds a central direct factor of order p.
  const StructuralReport padded = structural_report(GroupSpec(padded_family()[0].matrix.over(3)), 0);
  CHECK(padded.order_exponent == 8);
  CHECK_FALSE(padded.enumerated);
  CHECK(padded.centre_dim == 3 + 1);
}

TEST_CASE("abelian and random groups") {
  const StructuralReport zero = structural_report(GroupSpec(LinFormMatrix(PrimeField(3), 3, 3, 2)));
  CHECK(zero.nilpotency_class == 1);
  CHECK(zero.derived_dim == 0);
  CHECK(zero.centre_dim == 5);
  CHECK(zero.consistent());
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const LinFormMatrix b = testing::random_skew(PrimeField(3), 2 + trial % 3, 1 + trial % 2, rng);
    CHECK(structural_report(GroupSpec(b)).consistent());
  }
  CHECK_THROWS_AS(enumerate_structure(GroupSpec(four_generator_family()[0].matrix.over(5)), 1000), budget_exceeded);
}
