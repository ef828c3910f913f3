#include <doctest.h>

#include <random>

#include "fgcert/group_ring.hpp"
#include "fgcert/sampling.hpp"

using namespace fgcert;

namespace {
const AlphabetPtr F2 = standard_alphabet(2);

FiniteGroupRingElement random_element(std::uint32_t m, std::uint32_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, m - 1);
  FiniteGroupRingElement out(m, rank);
  for (int t = 0; t < 4; ++t) {
    IntVector exps(rank);
    for (auto& v : exps) v = d(rng);
    out += FiniteGroupRingElement::group_element(m, exps, d(rng));
  }
  return out;
}
}  // namespace

TEST_CASE("free group ring arithmetic") {
  const Word x = Word::generator(F2, 0), y = Word::generator(F2, 1);
  const auto a = FreeGroupRingElement::from_word(x) - FreeGroupRingElement::constant(F2, 1);
  CHECK(to_string(a) == "-1 + x");
  CHECK(to_string(FreeGroupRingElement(F2)) == "0");
  CHECK((a - a).is_zero());
  // (x - 1)(x^-1) = 1 - x^-1
  CHECK(a * inverse(x) == FreeGroupRingElement::constant(F2, 1) - FreeGroupRingElement::from_word(inverse(x)));
  CHECK((y * a).coefficient(y * x) == 1);
}

TEST_CASE("finite group ring encodes exponents mod m") {
  const auto g = FiniteGroupRingElement::group_element(3, {4, -1});
  CHECK(g.decode(g.terms().begin()->first) == IntVector{1, 2});
  CHECK((g + FiniteGroupRingElement::group_element(3, {1, 2}, 2)).is_zero());
}

TEST_CASE("property: commutative ring axioms") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = 2 + i % 3, rank = 1 + i % 3;
    const auto a = random_element(m, rank, rng), b = random_element(m, rank, rng), c = random_element(m, rank, rng);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * FiniteGroupRingElement::constant(m, rank, 1) == a);
  }
}

TEST_CASE("property: reduction is a ring map") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto u = FreeGroupRingElement::from_word(random_word(F2, 6, rng), 2) +
                   FreeGroupRingElement::from_word(random_word(F2, 6, rng), -1);
    const auto v = FreeGroupRingElement::from_word(random_word(F2, 6, rng));
    REQUIRE(FiniteGroupRingElement::reduce(u * v, 4) ==
            FiniteGroupRingElement::reduce(u, 4) * FiniteGroupRingElement::reduce(v, 4));
  }
}
