#include <doctest.h>

#include "fgcert/errors.hpp"
#include "fgcert/schreier_modules.hpp"

using namespace fgcert;

namespace {
SchreierSystemPtr r_system() { return SchreierSystem::build(c2_quotient_rank3(), GeneratorOrder::generator_major); }
const IntMatrix kB{{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
}  // namespace

TEST_CASE("conjugation by x on R/R'") {
  const auto r = r_system();
  const auto F3 = r->alphabet();
  CHECK(conjugation_matrix(*r, Word::generator(F3, 0)) == kB);
  CHECK(conjugation_matrix(*r, Word(F3)) == IntMatrix::identity(5));
  CHECK(kB * kB == IntMatrix::identity(5));
}

TEST_CASE("eigenlattices of B") {
  const Lattice plus = eigen_lattice(kB, 1), minus = eigen_lattice(kB, -1);
  CHECK(plus == Lattice(5, IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}}));
  CHECK(minus == Lattice(5, IntMatrix{{0, 1, -1, 0, 0}, {0, 0, 0, 1, -1}}));
  CHECK(to_string(minus) == "[[0,1,-1,0,0],[0,0,0,1,-1]]");
  CHECK(plus.is_saturated());
  CHECK(minus.is_saturated());
  for (std::size_t i = 0; i < minus.rank(); ++i) {
    const auto v = minus.basis_vector(i);
    auto neg = v;
    for (auto& x : neg) x = -x;
    CHECK(kB * v == neg);
  }
  CHECK(eigen_lattice(IntMatrix::identity(3), 1).rank() == 3);
}

TEST_CASE("induced action on V_-1") {
  const auto r = r_system();
  const Lattice minus = eigen_lattice(kB, -1);
  CHECK(induced_action(*r, named::alpha_rank3(), minus) == IntMatrix{{1, 1}, {0, 1}});
  CHECK(induced_action(*r, named::beta_rank3(), minus) == IntMatrix{{1, 0}, {1, 1}});
  CHECK(induced_action(*r, VerifiedAut::identity(r->alphabet()), minus) == IntMatrix::identity(2));
}

TEST_CASE("automorphisms that move R are rejected") {
  const auto r = r_system();
  const auto F3 = r->alphabet();
  const auto swap_xy = permutation(F3, {1, 0, 2});
  CHECK_FALSE(preserves_subgroup(*r, swap_xy));
  CHECK_THROWS_AS(abelianized_action(*r, swap_xy), PreconditionError);
}

TEST_CASE("property: B commutes with R-preserving actions") {
  const auto r = r_system();
  const auto F3 = r->alphabet();
  const std::vector<VerifiedAut> auts{named::alpha_rank3(), named::beta_rank3(), inner_aut(Word::generator(F3, 0)),
                                      inner_aut(Word::generator(F3, 1)), inner_aut(Word::generator(F3, 2))};
  for (const auto& s : auts)
    for (const auto& t : auts) {
      const auto st = compose(s, t);
      REQUIRE(preserves_subgroup(*r, st));
      const IntMatrix rho = abelianized_action(*r, st);
      REQUIRE(rho * kB == kB * rho);
    }
}
