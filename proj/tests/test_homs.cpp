#include <doctest.h>

#include <random>

#include "fgcert/errors.hpp"
#include "fgcert/homs.hpp"
#include "fgcert/sampling.hpp"

using namespace fgcert;

namespace {
const AlphabetPtr F2 = standard_alphabet(2);
Word w(const char* s) { return parse_word(s, F2); }

// Letter-by-letter substitution, independent of FreeHom::operator().
Word substitute(const FreeHom& h, const Word& word) {
  Word out(h.codomain());
  for (const auto& l : word.letters()) out = out * (l.inverse ? inverse(h.image(l.generator)) : h.image(l.generator));
  return out;
}
}  // namespace

TEST_CASE("named alpha and beta") {
  const auto al = named::alpha_rank2(), be = named::beta_rank2();
  CHECK(al(w("y")) == w("y x^2"));
  CHECK(al(w("y^2")) == w("y x^2 y x^2"));
  CHECK(FreeHom::identity(F2)(w("x y^-1 x")) == w("x y^-1 x"));
  CHECK(compose(FreeHom::identity(F2), al.forward()) == al.forward());
  CHECK(compose(al, al.inverse()).forward() == FreeHom::identity(F2));
  const auto ab = compose(al.forward(), be.forward());
  CHECK(ab(w("x")) == al(w("x y^2")));
  CHECK(ab(w("x")) == w("x y x^2 y x^2"));
  CHECK(ab(w("x")) == substitute(al.forward(), substitute(be.forward(), w("x"))));
}

TEST_CASE("inner automorphisms conjugate on the right") {
  CHECK(inner_aut(Word(F2)).forward() == FreeHom::identity(F2));
  CHECK(inner_aut(w("x"))(w("y")) == w("x^-1 y x"));
  CHECK(inner_aut(w("x"))(w("x")) == w("x"));
}

TEST_CASE("abelianization matrices") {
  CHECK(abelianization_matrix(named::alpha_rank2().forward()) == IntMatrix{{1, 2}, {0, 1}});
  CHECK(abelianization_matrix(named::beta_rank2().forward()) == IntMatrix{{1, 0}, {2, 1}});
  CHECK(abelianization_matrix(FreeHom::identity(F2)) == IntMatrix::identity(2));
}

TEST_CASE("fixes_word") {
  const Word yx = commutator(w("y"), w("x"));
  CHECK(fixes_word(named::alpha_rank2().forward(), yx));
  CHECK(fixes_word(named::beta_rank2().forward(), yx));
  CHECK_FALSE(fixes_word(named::alpha_rank2().forward(), w("y")));
}

TEST_CASE("VerifiedAut rejects a non-inverse") {
  const FreeHom collapse(F2, F2, {w("x"), w("x")});
  CHECK_THROWS_AS(VerifiedAut(collapse, FreeHom::identity(F2)), PreconditionError);
}

TEST_CASE("rank-3 named automorphisms") {
  const auto F3 = standard_alphabet(3);
  CHECK(named::alpha_rank3()(parse_word("z", F3)) == parse_word("z y", F3));
  CHECK(named::beta_rank3()(parse_word("y", F3)) == parse_word("y z", F3));
}

TEST_CASE("hom text roundtrip") {
  const auto h = named::alpha_rank2().forward();
  CHECK(parse_hom(format_hom(h), F2, F2) == h);
}

TEST_CASE("property: functoriality and hom law") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto a = standard_alphabet(1 + i % 3);
    std::vector<Word> fi, gi;
    for (std::size_t k = 0; k < a->rank(); ++k) {
      fi.push_back(random_word(a, 8, rng));
      gi.push_back(random_word(a, 8, rng));
    }
    const FreeHom f(a, a, fi), g(a, a, gi);
    REQUIRE(abelianization_matrix(compose(f, g)) == abelianization_matrix(f) * abelianization_matrix(g));
    const Word u = random_word(a, 16, rng), v = random_word(a, 16, rng);
    REQUIRE(f(u * v) == f(u) * f(v));
    REQUIRE(f(u) == substitute(f, u));
  }
}
