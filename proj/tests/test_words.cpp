#include <doctest.h>

#include <random>

#include "fgcert/errors.hpp"
#include "fgcert/sampling.hpp"
#include "fgcert/words.hpp"

using namespace fgcert;

namespace {
const AlphabetPtr F2 = standard_alphabet(2);
Word w(const char* s) { return parse_word(s, F2); }
}  // namespace

TEST_CASE("parse produces syllables") {
  const Word a = w("x^2");
  REQUIRE(a.syllables().size() == 1);
  CHECK(a.syllables()[0] == Syllable{0, 2});
  CHECK(w("x x^-1").is_identity());
  const Word e2 = w("y x y^-1 x^-1");
  const std::vector<Syllable> expected{{1, 1}, {0, 1}, {1, -1}, {0, -1}};
  CHECK(std::vector<Syllable>(e2.syllables().begin(), e2.syllables().end()) == expected);
  CHECK(w("1").is_identity());
  CHECK_THROWS_AS(w(""), ParseError);
  CHECK(w("x x x") == w("x^3"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(w("q"), ParseError);
  CHECK_THROWS_AS(w("x^"), ParseError);
  try {
    w("x y^z");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("multiplication, inverse, conjugation, commutator") {
  const Word x = Word::generator(F2, 0), y = Word::generator(F2, 1);
  CHECK((x * inverse(x)).is_identity());
  CHECK(to_string(w("x^2") * w("y^2")) == "x^2 y^2");
  CHECK((w("y x y^-1 x^-1") * w("x y x^-1 y^-1")).is_identity());
  CHECK(inverse(x * y) == w("y^-1 x^-1"));
  CHECK(commutator(y, x) == w("y x y^-1 x^-1"));
  CHECK(conjugate(y, x) == w("x^-1 y x"));
  CHECK(to_string(Word(F2)) == "1");
  CHECK(w("x^3 y^-2").length() == 5);
  CHECK(w("x^3 y^-2 x").exponent_sums() == std::vector<std::int64_t>{4, -2});
  CHECK(x.power(5) == w("x^5"));
  CHECK(w("x y").power(-2) == w("y^-1 x^-1 y^-1 x^-1"));
}

TEST_CASE("self-multiplication does not alias") {
  Word a = w("x y x^-1");
  a *= a;
  CHECK(a == w("x y^2 x^-1"));
}

TEST_CASE("alphabets must match") {
  const Word x2 = Word::generator(F2, 0), x3 = Word::generator(standard_alphabet(3), 0);
  CHECK_THROWS_AS(x2 * x3, AlphabetMismatch);
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("property: normal form against the stack oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto a = standard_alphabet(1 + i % 3);
    const Word u = random_word(a, 64, rng), v = random_word(a, 64, rng), t = random_word(a, 64, rng);
    REQUIRE((u * v) * t == u * (v * t));
    REQUIRE((u * inverse(u)).is_identity());
    REQUIRE(parse_word(to_string(u), a) == u);
    auto letters = u.letters();
    const auto lv = v.letters();
    letters.insert(letters.end(), lv.begin(), lv.end());
    REQUIRE(reduce_letters(a, letters) == u * v);
    REQUIRE(Word::from_letters(a, letters) == u * v);
  }
}
