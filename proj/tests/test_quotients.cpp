#include <doctest.h>

#include <algorithm>
#include <random>

#include "fgcert/congruence.hpp"
#include "fgcert/errors.hpp"
#include "fgcert/quotients.hpp"
#include "fgcert/sampling.hpp"

using namespace fgcert;

namespace {
std::vector<std::string> texts(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& x : ws) out.push_back(to_string(x));
  return out;
}
Word e(const char* s) { return parse_word(s, klein_system()->generator_alphabet()); }
Word f2(const char* s) { return parse_word(s, standard_alphabet(2)); }
}  // namespace

TEST_CASE("Delta") {
  const auto& d = *klein_system();
  CHECK(d.index() == 4);
  CHECK(texts(d.transversal()) == std::vector<std::string>{"1", "x", "y", "x y"});
  CHECK(texts(d.schreier_generators()) ==
        std::vector<std::string>{"x^2", "y x y^-1 x^-1", "y^2", "x y x y^-1", "x y^2 x^-1"});
  CHECK(d.contains(f2("x^2")));
  CHECK_FALSE(d.contains(f2("x")));
  CHECK(d.contains(f2("1")));
  CHECK(d.rewrite(f2("y x^2 y x^2")) == e("e2 e4 e3 e1"));
  CHECK(d.rewrite(f2("x y^2 x y^2")) == e("e5 e1 e3"));
  CHECK(d.rewrite(d.schreier_generators()[1]) == e("e2"));
  CHECK_THROWS_AS(d.rewrite(f2("x")), PreconditionError);
}

TEST_CASE("R in F3") {
  const auto r = SchreierSystem::build(c2_quotient_rank3(), GeneratorOrder::generator_major);
  CHECK(texts(r->transversal()) == std::vector<std::string>{"1", "x"});
  CHECK(texts(r->schreier_generators()) == std::vector<std::string>{"x^2", "y", "x y x^-1", "z", "x z x^-1"});
}

TEST_CASE("trivial quotient") {
  const auto a = standard_alphabet(3);
  const FiniteQuotient q(a, 1, {{0}, {0}, {0}});
  const auto s = kernel_subgroup(q);
  CHECK(s->index() == 1);
  CHECK(texts(s->schreier_generators()) == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("schreier rank") {
  CHECK(schreier_rank(4, 2) == 5);
  CHECK(schreier_rank(2, 3) == 5);
  CHECK(schreier_rank(1, 7) == 7);
}

TEST_CASE("pi on Delta") {
  const auto target = make_alphabet({"alpha", "beta"});
  const auto pi = klein_pi(target);
  CHECK(pi.on_subgroup_word(e("e2")).is_identity());
  CHECK(pi.on_subgroup_word(e("e1 e4")).is_identity());
  CHECK(pi.on_subgroup_word(e("e2 e4 e3 e1 e4 e2 e5 e1")).is_identity());
}

TEST_CASE("quotient json roundtrip and validation") {
  const auto q = klein_quotient();
  const auto back = FiniteQuotient::from_json(q.to_json());
  CHECK(back.images() == q.images());
  CHECK_THROWS(FiniteQuotient(standard_alphabet(1), 2, {{0, 0}}));
}

TEST_CASE("intersecting stabilizers respects the resource cap") {
  const auto a = standard_alphabet(2);
  const std::uint32_t big[] = {400, 400};
  const auto q = abelian_quotient(a, big);
  std::vector<PointedAction> parts{{q, 0}};
  CHECK_THROWS_AS(intersect_stabilizers(parts, 1000), ResourceError);
}

TEST_CASE("property: rewriting roundtrip and Schreier invariants") {
  std::mt19937_64 rng(3);
  for (const auto& s : {klein_system(), SchreierSystem::build(c2_quotient_rank3(), GeneratorOrder::generator_major)}) {
    for (int i = 0; i < 1000; ++i) {
      const Word w = random_subgroup_element(*s, 20, rng);
      REQUIRE(s->expand(s->rewrite(w)) == w);
      const Word v = random_word(s->generator_alphabet(), 20, rng);
      REQUIRE(s->rewrite(s->expand(v)) == v);
    }
  }
  std::uniform_int_distribution<std::size_t> size(1, 12), rank(1, 3);
  for (int i = 0; i < 200; ++i) {
    const auto a = standard_alphabet(rank(rng));
    const auto n = size(rng);
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < a->rank(); ++g) {
      Permutation p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>(k);
      std::shuffle(p.begin(), p.end(), rng);
      images.push_back(p);
    }
    const auto s = kernel_subgroup(FiniteQuotient(a, n, images));
    REQUIRE(is_prefix_closed(s->transversal()));
    REQUIRE(s->schreier_generators().size() == schreier_rank(s->index(), a->rank()));
    for (const auto& g : s->schreier_generators()) REQUIRE(s->contains(g));
  }
}
