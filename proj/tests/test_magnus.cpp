#include <doctest.h>

#include <random>

#include "fgcert/errors.hpp"
#include "fgcert/magnus.hpp"
#include "fgcert/sampling.hpp"

using namespace fgcert;

namespace {
const AlphabetPtr F2 = standard_alphabet(2);
Word w(const char* s) { return parse_word(s, F2); }
FreeGroupRingElement one(const AlphabetPtr& a) { return FreeGroupRingElement::constant(a, 1); }
}  // namespace

TEST_CASE("Fox coordinates of generators, inverses, identity") {
  const auto a = standard_alphabet(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto c = fox_coordinates(Word::generator(a, i));
    for (std::size_t j = 0; j < 3; ++j) CHECK(c[j] == (i == j ? one(a) : FreeGroupRingElement(a)));
  }
  CHECK(to_string(fox_coordinates(w("x^-1"))[0]) == "-x^-1");
  for (const auto& c : fox_coordinates(Word(F2))) CHECK(c.is_zero());
}

TEST_CASE("property: fundamental identity") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10000; ++i) {
    const auto a = standard_alphabet(1 + i % 3);
    const Word x = random_word(a, 30, rng);
    REQUIRE(fox_resubstitute(a, fox_coordinates(x)) == FreeGroupRingElement::from_word(x) - one(a));
  }
}

TEST_CASE("Magnus images") {
  const auto x = magnus_image(w("x"), 3);
  CHECK(x.top() == IntVector{1, 0});
  CHECK(x.bottom()[0] == FiniteGroupRingElement::constant(3, 2, 1));
  CHECK(x.bottom()[1].is_zero());
  CHECK(magnus_image(Word(F2), 3) == PhiElement::identity(3, 2));
  CHECK(magnus_image(w("x"), 3) * magnus_image(w("y"), 3) == magnus_image(w("x y"), 3));
  const auto c = magnus_image(w("x^2 y x^-2 y^-1"), 2);
  CHECK(c == magnus_image(w("x^2"), 2) * magnus_image(w("y"), 2) * magnus_image(w("x^-2"), 2) *
                 magnus_image(w("y^-1"), 2));
}

TEST_CASE("PhiElement rejects an inconsistent bottom row") {
  std::vector<FiniteGroupRingElement> bottom{FiniteGroupRingElement::constant(3, 2, 1),
                                             FiniteGroupRingElement::constant(3, 2, 1)};
  CHECK_THROWS_AS(PhiElement(3, {1, 0}, bottom), PreconditionError);
}

TEST_CASE("property: Magnus homomorphism and inverses") {
  std::mt19937_64 rng(22);
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {2, 4}, {3, 2}, {3, 3}}) {
    const auto a = standard_alphabet(n);
    for (int i = 0; i < 1000; ++i) {
      const Word u = random_word(a, 20, rng), v = random_word(a, 20, rng);
      const auto mu = magnus_image(u, m);
      REQUIRE(magnus_image(u * v, m) == mu * magnus_image(v, m));
      REQUIRE(mu * mu.inverse() == PhiElement::identity(m, static_cast<std::uint32_t>(n)));
      REQUIRE(mu * PhiElement::identity(m, static_cast<std::uint32_t>(n)) == mu);
    }
  }
}

TEST_CASE("Jacobian composition law") {
  const auto al = named::alpha_rank2().forward(), be = named::beta_rank2().forward();
  CHECK(jacobian(compose(al, be)) == jacobian(al) * apply_entrywise(al, jacobian(be)));
  const auto id = FreeHom::identity(F2);
  CHECK(jacobian(id) == FreeRingMatrix::identity(2, FreeGroupRingElement(F2), one(F2)));
  for (std::uint32_t m : {2u, 3u, 4u})
    CHECK(jacobian_mod(compose(al, be), m) == jacobian_mod(al, m) * apply_entrywise(al, jacobian_mod(be, m)));
  const auto inn = inner_aut(w("x")).forward();
  CHECK(jacobian_mod(inn, 2) == jacobian_mod(compose(inn, id), 2));
  CHECK(jacobian_mod(id, 2) == FiniteRingMatrix::identity(2, FiniteGroupRingElement(2, 2),
                                                          FiniteGroupRingElement::constant(2, 2, 1)));
}

TEST_CASE("inner automorphism Jacobians invert mod 2") {
  const auto F3 = standard_alphabet(3);
  const auto s = inner_aut(Word::generator(F3, 0));
  const auto prod = jacobian_mod(s.forward(), 2) * apply_entrywise(s.forward(), jacobian_mod(s.backward(), 2));
  CHECK(prod == FiniteRingMatrix::identity(3, FiniteGroupRingElement(2, 3), FiniteGroupRingElement::constant(2, 3, 1)));
}

TEST_CASE("KA check") {
  const auto rep = ka_check({inner_aut(w("x")), inner_aut(w("y"))}, 2);
  CHECK(rep.passed());
  CHECK(rep.pairs_checked == 4);
  // [[1,2],[0,1]] is the identity mod 2 but not mod 3.
  CHECK(acts_trivially_mod(named::alpha_rank2().forward(), 2));
  CHECK_FALSE(acts_trivially_mod(named::alpha_rank2().forward(), 3));
  const auto bad = ka_check({named::alpha_rank2()}, 3);
  CHECK_FALSE(bad.precondition_failures.empty());
}

TEST_CASE("local commutator check") {
  const ModMatrix zero(3, 3, 9);
  CHECK(local_commutator_check(3, 2, 1, 1, {zero}, {zero}).passed());
  ModMatrix a(3, 3, 8), b(3, 3, 8);
  a.set(0, 1, 2);
  b.set(1, 0, 4);
  const auto rep = local_commutator_check(2, 3, 1, 2, {a}, {b});
  CHECK(rep.passed());
  CHECK(rep.pairs_checked == 1);
  ModMatrix outside(3, 3, 8);
  outside.set(0, 0, 1);
  CHECK_THROWS_AS(local_commutator_check(2, 3, 1, 2, {outside}, {b}), PreconditionError);
}
