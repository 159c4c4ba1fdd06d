#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "grpinv/catalog.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/ideals.hpp"
#include "grpinv/linforms.hpp"

using namespace grpinv;
using grpinv::testing::numbered;
using grpinv::testing::parse_linear_matrix;

namespace {

// e_i (x) f_j (x) g_k, 1-based.
Tensor3 tensor_from(const PrimeField& f, std::size_t r, std::size_t s, std::size_t t,
                    std::initializer_list<std::array<std::int64_t, 4>> terms) {
  Tensor3 out(f, r, s, t);
  for (const auto& [i, j, k, c] : terms) out.set(i - 1, j - 1, k - 1, out(i - 1, j - 1, k - 1) + c);
  return out;
}

}  // namespace

TEST_CASE("flattenings of a 3 x 3 x 2 tensor") {
  PrimeField f(101);
  const Tensor3 t = tensor_from(f, 3, 3, 2,
                                {{1, 1, 1, 1}, {1, 3, 2, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}, {3, 1, 1, 1},
                                 {3, 3, 1, 1}});
  CHECK(flatten(t, 1) == parse_linear_matrix(f, numbered("x", 3), "x1+x3, x2; x2, x2; x3, x1"));
  CHECK(flatten(t, 2) == parse_linear_matrix(f, numbered("y", 3), "y1, y3; y2, y1+y2; y1+y3, 0"));
  CHECK(flatten(t, 3) == parse_linear_matrix(f, numbered("z", 2), "z1, 0, z2; z2, z1+z2, 0; z1, 0, z1"));
  CHECK_THROWS_AS(flatten(t, 4), usage_error);
}

TEST_CASE("flattenings of a skew tensor") {
  PrimeField f(11);
  const Tensor3 t = tensor_from(f, 3, 3, 2,
                                {{1, 2, 1, 1}, {2, 1, 1, -1}, {1, 3, 2, 1}, {3, 1, 2, -1}, {2, 3, 1, 1}, {3, 2, 1, -1},
                                 {2, 3, 2, 1}, {3, 2, 2, -1}});
  CHECK(t.is_skew());
  CHECK(flatten(t, 1) == parse_linear_matrix(f, numbered("x", 3), "-x2, -x3; x1-x3, -x3; x2, x1+x2"));
  CHECK(flatten(t, 2) == parse_linear_matrix(f, numbered("y", 3), "y2, y3; y3-y1, y3; -y2, -y1-y2"));
  const LinFormMatrix f3 = flatten(t, 3);
  CHECK(f3 == parse_linear_matrix(f, numbered("z", 2), "0, z1, z2; -z1, 0, z1+z2; -z2, -z1-z2, 0"));
  CHECK(f3.is_skew_symmetric());
  // The second flattening is the adjoint of the third, the first its negative.
  CHECK(adjoint(f3) == flatten(t, 2));
  CHECK(Tensor3::from_third_flattening(f3) == t);
}

TEST_CASE("transformed flattenings of a 2 x 2 x 2 tensor") {
  PrimeField f(13);
  const Tensor3 t = tensor_from(f, 2, 2, 2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 2, 1, 1}});
  CHECK(flatten(t, 1) == parse_linear_matrix(f, numbered("x", 2), "x1, 0; x2, x1"));
  CHECK(flatten(t, 2) == parse_linear_matrix(f, numbered("y", 2), "y1, y2; y2, 0"));
  CHECK(flatten(t, 3) == parse_linear_matrix(f, numbered("z", 2), "z1, z2; 0, z1"));
  const FpMatrix a1(f, {{1, 0}, {1, 1}}), a2(f, {{1, -1}, {-1, 0}}), a3(f, {{1, -1}, {0, 1}});
  const Tensor3 at = act(t, a1, a2, a3);
  CHECK(at == tensor_from(f, 2, 2, 2,
                          {{1, 1, 1, 2}, {1, 1, 2, -1}, {1, 2, 1, -1}, {2, 1, 1, 1}, {2, 1, 2, -1}, {2, 2, 1, -1}}));
  const auto f1 = parse_linear_matrix(f, numbered("x", 2), "2*x1+x2, -x1-x2; -x1-x2, 0");
  const auto f2 = parse_linear_matrix(f, numbered("y", 2), "2*y1-y2, -y1; y1-y2, -y1");
  const auto f3 = parse_linear_matrix(f, numbered("z", 2), "2*z1-z2, -z1; z1-z2, -z1");
  CHECK(flatten(at, 1) == f1);
  CHECK(flatten(at, 2) == f2);
  CHECK(flatten(at, 3) == f3);
  CHECK(substitute_and_multiply(flatten(t, 1), a2, a1, a3.transpose()) == f1);
  CHECK(substitute_and_multiply(flatten(t, 2), a1, a2, a3.transpose()) == f2);
  CHECK(substitute_and_multiply(flatten(t, 3), a1, a3, a2.transpose()) == f3);
}

TEST_CASE("flattening transformation laws on random tensors") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + trial % 3, s = 1 + (trial / 3) % 3, tt = 1 + (trial / 9) % 3;
      Tensor3 t(f, r, s, tt);
      std::uniform_int_distribution<std::int64_t> c(0, p - 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
          for (std::size_t k = 0; k < tt; ++k) t.set(i, j, k, c(rng));
      const FpMatrix a1 = random_invertible(f, r, rng), a2 = random_invertible(f, s, rng),
                     a3 = random_invertible(f, tt, rng);
      const Tensor3 at = act(t, a1, a2, a3);
      CHECK(flatten(at, 1) == substitute_and_multiply(flatten(t, 1), a2, a1, a3.transpose()));
      CHECK(flatten(at, 2) == substitute_and_multiply(flatten(t, 2), a1, a2, a3.transpose()));
      CHECK(flatten(at, 3) == substitute_and_multiply(flatten(t, 3), a1, a3, a2.transpose()));
    }
  }
}

TEST_CASE("adjoints of B1..B6") {
  const std::vector<std::string> xyzw{"x", "y", "z", "w"};
  const char* expected[] = {
      "y, z, w; -x, 0, 0; 0, -x, 0; 0, 0, -x",
      "y, z, 0; -x, 0, z; 0, -x, -y; 0, 0, 0",
      "y, z, 0; -x, 0, w; 0, -x, 0; 0, 0, -y",
      "y, z, w; -x, 0, z; 0, -x, -y; 0, 0, -x",
      "y, w, 0; -x, z, 0; 0, -y, w; 0, -x, -z",
      "y, z, w; -x, @w, 0; w, -x, 0; -z, -@y, -x",
  };
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    PrimeField f(p);
    const auto family = four_generator_family();
    for (std::size_t i = 0; i < family.size(); ++i) {
      CAPTURE(family[i].name);
      const LinFormMatrix b = family[i].matrix.over(p);
      CHECK(b.is_skew_symmetric());
      CHECK(adjoint(b) == parse_linear_matrix(f, xyzw, expected[i], f.primitive_element()));
    }
  }
}

TEST_CASE("B1..B6 as printed") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const char* printed[] = {
      "0, x, y, z; -x, 0, 0, 0; -y, 0, 0, 0; -z, 0, 0, 0",
      "0, x, y, 0; -x, 0, z, 0; -y, -z, 0, 0; 0, 0, 0, 0",
      "0, x, y, 0; -x, 0, 0, z; -y, 0, 0, 0; 0, -z, 0, 0",
      "0, x, y, z; -x, 0, z, 0; -y, -z, 0, 0; -z, 0, 0, 0",
      "0, x, 0, y; -x, 0, y, 0; 0, -y, 0, z; -y, 0, -z, 0",
      "0, x, y, z; -x, 0, 0, @y; -y, 0, 0, x; -z, -@y, -x, 0",
  };
  PrimeField f(7);
  const auto family = four_generator_family();
  for (std::size_t i = 0; i < family.size(); ++i)
    CHECK(family[i].matrix.over(7) == parse_linear_matrix(f, xyz, printed[i], 3));
}

TEST_CASE("Pfaffian squares to the determinant") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    for (std::size_t n : {2u, 4u, 6u}) {
      for (int trial = 0; trial < 4; ++trial) {
        const LinFormMatrix b = testing::random_skew(f, n, 2 + trial % 2, rng);
        auto ring = make_ring(f, b.nvars(), "y");
        const Poly pf = pfaffian(b, ring);
        CHECK(pf * pf == determinant(b, ring));
        if (!pf.is_zero()) CHECK(pf.degree() == static_cast<int>(n / 2));
      }
    }
  }
  PrimeField f(5);
  LinFormMatrix j(f, 4, 4, 1);
  j.set(0, 0, 1, 1);
  j.set(0, 1, 0, -1);
  j.set(0, 2, 3, 1);
  j.set(0, 3, 2, -1);
  CHECK(pfaffian(j).to_string() == "y1^2");
  CHECK_THROWS_AS(pfaffian(LinFormMatrix(f, 3, 3, 1)), usage_error);
}

TEST_CASE("transform and evaluation") {
  std::mt19937_64 rng(17);
  PrimeField f(5);
  for (int trial = 0; trial < 30; ++trial) {
    const LinFormMatrix b = testing::random_skew(f, 4, 3, rng);
    const FpMatrix x = random_invertible(f, 4, rng), z = random_invertible(f, 3, rng);
    const LinFormMatrix c = transform(b, x, z);
    CHECK(c.is_skew_symmetric());
    // C(y) = X B(yZ) X^T pointwise.
    testing::for_each_point(5, 3, [&](const std::vector<Residue>& y) {
      const auto yz = z.transpose().apply(y);
      CHECK(evaluate(c, y) == x * evaluate(b, yz) * x.transpose());
    });
    CHECK(transform(c, x.inverse(), z.inverse()) == b);
  }
  FpMatrix singular(f, 4, 4);
  CHECK_THROWS_AS(transform(testing::random_skew(f, 4, 3, rng), singular, FpMatrix::identity(f, 3)), usage_error);
}
