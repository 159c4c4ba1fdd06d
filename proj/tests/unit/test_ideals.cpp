#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "grpinv/catalog.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/ideals.hpp"

using namespace grpinv;

TEST_CASE("minors of the 3 x 3 example") {
  const LinFormMatrix d = nongeneric_matrix().matrix.over(5);
  auto ring = make_ring(5, 3);
  const auto m1 = minors(d, 1, ring);
  CHECK(m1.size() == 3);
  const auto m3 = minors(d, 3, ring);
  REQUIRE(m3.size() == 1);
  CHECK(m3[0].to_string() == "z1*z2*z3");
  CHECK_THROWS_AS(minors(d, 0, ring), usage_error);
  CHECK_THROWS_AS(minors(d, 4, ring), usage_error);
}

TEST_CASE("minors vanish exactly where evaluated submatrices are singular") {
  std::mt19937_64 rng(8);
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 6; ++trial) {
      const LinFormMatrix d = trial % 2 ? testing::random_skew(f, 4, 2, rng)
                                        : testing::random_linear(f, 3, 4, 2, rng);
      auto ring = make_ring(f, d.nvars());
      for (std::size_t k = 1; k <= std::min(d.rows(), d.cols()); ++k) {
        const auto gens = minors(d, k, ring);
        std::uint64_t count = 0;
        testing::for_each_point(p, d.nvars(), [&](const std::vector<Residue>& v) {
          count += std::all_of(gens.begin(), gens.end(), [&](const Poly& g) { return g.evaluate(v) == 0; });
        });
        CHECK(count == testing::minor_vanishing_count(d, k));
      }
    }
  }
}

TEST_CASE("rank ideal vector of the 3 x 3 example") {
  RankIdealVector v(nongeneric_matrix().matrix.over(7));
  REQUIRE(v.size() == 3);
  CHECK(v.affine_dim(1) == 0);
  CHECK(v.affine_dim(2) == 1);
  CHECK(v.affine_dim(3) == 2);
  CHECK(v.degree(3) == 3);
  CHECK(v.degree(1) == 0);
}

TEST_CASE("ideal dimensions of B1..B6 and their adjoints") {
  for (const auto& [name, g] : four_generator_family()) {
    CAPTURE(name);
    const LinFormMatrix b = g.over(7);
    RankIdealVector direct(b, "y");
    CHECK(direct.affine_dim(1) == 0);
    // I_4 is generated by the square of the Pfaffian (zero for the degenerate B1, B2).
    const Poly pf = pfaffian(b, direct.ring());
    if (pf.is_zero()) {
      CHECK(direct.generators(4).empty());
      CHECK(direct.affine_dim(4) == 3);
    } else {
      REQUIRE(direct.generators(4).size() == 1);
      CHECK(direct.generators(4)[0] == (pf * pf).monic());
      CHECK(direct.affine_dim(4) == 2);
    }
    RankIdealVector adj(adjoint(b), "x");
    CHECK(adj.size() == 3);
    CHECK(adj.ideal(3).groebner.has_value());
  }
}

TEST_CASE("zero matrix: every ideal is zero") {
  PrimeField f(3);
  RankIdealVector v(LinFormMatrix(f, 4, 4, 3));
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(v.generators(k).empty());
    CHECK(v.affine_dim(k) == 3);
    CHECK(v.degree(k) == 1);
  }
}
