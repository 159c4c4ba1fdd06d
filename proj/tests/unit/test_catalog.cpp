#include <doctest.h>

#include "grpinv/catalog.hpp"
#include "grpinv/errors.hpp"

using namespace grpinv;

TEST_CASE("omega slots use the smallest primitive root") {
  const GenericMatrix b6 = four_generator_family()[5].matrix;
  CHECK(b6.over(7).coeff(1, 1, 3) == 3);
  CHECK(b6.over(7).coeff(1, 3, 1) == 4);
  CHECK(b6.over(5).coeff(1, 1, 3) == 2);
  CHECK(b6.over(11).is_skew_symmetric());
  CHECK(b6.over(5, false).coeff(1, 3, 1) == 0);
}

TEST_CASE("padding") {
  for (const auto& [name, m] : padded_family()) {
    CHECK(m.rows() == 5);
    CHECK(m.nvars() == 3);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 5; ++i) {
        CHECK(m.coeff(k, 4, i) == 0);
        CHECK(m.coeff(k, i, 4) == 0);
      }
  }
  CHECK(padded_family()[5].matrix.omega_slots().size() == 1);
  CHECK_THROWS_AS(four_generator_family()[0].matrix.padded(3), usage_error);
}

TEST_CASE("Lee's matrix") {
  const LinFormMatrix m = lee_matrix().matrix.over(7);
  CHECK(m.is_skew_symmetric());
  CHECK(m.coeff(1, 2, 3) == 2);  // 2*y2 at (3, 4)
  CHECK(m.coeff(0, 1, 4) == 1);  // y1 at (2, 5)
}

TEST_CASE("generic matrix bounds") {
  GenericMatrix g(2, 3, 1);
  CHECK_THROWS_AS(g.set(1, 0, 0, 1), usage_error);
  CHECK_THROWS_AS(g.add_omega_slot({1, 3, 1}), usage_error);
  CHECK_THROWS_AS(GenericMatrix(0, 1, 1), usage_error);
}
