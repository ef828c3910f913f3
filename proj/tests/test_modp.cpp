#include <doctest.h>

#include "fgcert/errors.hpp"
#include "fgcert/modp.hpp"

using namespace fgcert;

TEST_CASE("number theory") {
  CHECK(mod_pow(3, 5, 11) == 1);
  CHECK(mod_inverse(3, 11) == 4);
  CHECK_THROWS_AS(mod_inverse(4, 8), PreconditionError);
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(multiplicative_order(3, 11) == 5);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
}

TEST_CASE("matrices mod m") {
  const auto a = ModMatrix::from_rows({{1, 2}, {3, 4}}, 5);
  CHECK(to_string(a * a) == "[[2,0],[0,2]]");
  CHECK(a.power(0).is_identity());
  CHECK(rank_mod_p(a) == 2);
  const auto inv = inverse_mod_p(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  CHECK_FALSE(inverse_mod_p(ModMatrix::from_rows({{1, 2}, {2, 4}}, 5)).has_value());
  const auto x = solve_mod_p(a, {1, 0});
  REQUIRE(x.has_value());
  CHECK(a * *x == ModVector{1, 0});
}

TEST_CASE("unipotent inverse") {
  ModMatrix m = ModMatrix::identity(3, 9);
  m.set(0, 1, 3);
  m.set(1, 2, 6);
  CHECK((m * unipotent_inverse(m)).is_identity());
}

TEST_CASE("subspaces and spinning") {
  Subspace s(3, 7);
  CHECK(s.insert({1, 2, 3}));
  CHECK_FALSE(s.insert({2, 4, 6}));
  CHECK(s.contains({3, 6, 2}));
  const auto cyc = ModMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 7);
  CHECK(spin({{1, 0, 0}}, {cyc}).dimension() == 3);
  CHECK(spin({{1, 1, 1}}, {cyc}).dimension() == 1);
  CHECK_THROWS(spin({{1, 0, 0}}, {}));
}
