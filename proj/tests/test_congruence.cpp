#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "fgcert/congruence.hpp"
#include "fgcert/errors.hpp"
#include "fgcert/sampling.hpp"

using namespace fgcert;

namespace {
const AlphabetPtr F2 = standard_alphabet(2);
Word x_pow(std::int64_t k) { return Word::generator(F2, 0, k); }

// S3 acting on 3 points: K is a point stabilizer of index 3, not normal.
FiniteQuotient s3_quotient() { return FiniteQuotient(make_alphabet({"a", "b"}), 3, {{1, 0, 2}, {1, 2, 0}}); }

// Right regular action of S3: K is the kernel, normal of index 6.
FiniteQuotient s3_regular_quotient() {
  using P = std::array<std::uint32_t, 3>;
  const P gens[2] = {{1, 0, 2}, {1, 2, 0}};
  std::vector<P> elems{{0, 1, 2}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      const P next{g[elems[i][0]], g[elems[i][1]], g[elems[i][2]]};
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
    }
  std::vector<Permutation> images;
  for (const auto& g : gens) {
    Permutation img;
    for (const auto& e : elems) {
      const P next{g[e[0]], g[e[1]], g[e[2]]};
      img.push_back(static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), next) - elems.begin()));
    }
    images.push_back(img);
  }
  return FiniteQuotient(make_alphabet({"a", "b"}), elems.size(), images);
}
}  // namespace

TEST_CASE("n = 1 certificate at p = 5") {
  const auto input = make_congruence_input(trivial_k_quotient(), 5);
  const auto cert = certify(input);
  CHECK(cert.index_of_n == 36);
  CHECK(cert.rank_of_n == 37);
  CHECK(cert.image_order_in_4_torus == 4);
  const BigInt p37 = boost::multiprecision::pow(BigInt(5), 37);
  CHECK(cert.order_f2_mod_npn == 36 * p37);
  CHECK(cert.order_f2_mod_m == 144 * p37);
  CHECK(cert.bound == 144 * p37);
  CHECK(cert.divides);
  CHECK(cert.order_f2_mod_m == cert.order_f2_mod_npn * cert.image_order_in_4_torus);
  const auto j = cert.to_json();
  CHECK(j.at("orderOfF2ModM").get<std::string>() == "10477378964424133300781250000");
}

TEST_CASE("n = 1 certificate at p = 7") {
  const auto cert = certify(make_congruence_input(trivial_k_quotient(), 7));
  CHECK(cert.order_f2_mod_m == 144 * boost::multiprecision::pow(BigInt(7), 37));
  CHECK(cert.divides);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(make_congruence_input(trivial_k_quotient(), 3), PreconditionError);
  CHECK_THROWS_AS(make_congruence_input(trivial_k_quotient(), 2), PreconditionError);
  CHECK_THROWS_AS(make_congruence_input(trivial_k_quotient(), 25), PreconditionError);
  CHECK_THROWS_AS(make_congruence_input(c2_quotient_rank3(), 5), PreconditionError);
}

TEST_CASE("N and M membership") {
  const auto n = std::make_shared<const NOracle>(make_congruence_input(trivial_k_quotient(), 5));
  CHECK(n->contains(x_pow(6)));
  CHECK_FALSE(n->contains(x_pow(1)));
  const MOracle m(n, 5);
  CHECK_FALSE(m.contains(x_pow(30)));
  CHECK(m.contains(x_pow(60)));
}

TEST_CASE("property: oracles on a non-normal K") {
  const auto input = make_congruence_input(s3_quotient(), 5);
  CHECK(input.n == 3);
  const auto n = std::make_shared<const NOracle>(input);
  const MOracle m(n, 5);
  // The four-fold intersection is not normal when K is not.
  CHECK_FALSE(n->is_normal());
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_subgroup_element(n->schreier(), 12, rng);
    REQUIRE(n->contains(w));
    REQUIRE(n->pi_lands_in_k(w));
    const Word c = commutator(w, random_subgroup_element(n->schreier(), 6, rng));
    REQUIRE(m.contains(c));
    const Word u = random_word(F2, 12, rng);
    if (m.contains(u)) {
      REQUIRE(n->contains(u));
      for (auto e : u.exponent_sums()) REQUIRE(e % 4 == 0);
    }
  }
  const auto cert = certify(input, *n);
  CHECK(cert.order_f2_mod_m == cert.order_f2_mod_npn * cert.image_order_in_4_torus);
  CHECK_FALSE(cert.n_is_normal);
}

TEST_CASE("property: N is normal when K is") {
  const auto input = make_congruence_input(s3_regular_quotient(), 5);
  CHECK(input.n == 6);
  const auto n = std::make_shared<const NOracle>(input);
  CHECK(n->is_normal());
  CHECK(36 * 1296 % n->index() == 0);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_subgroup_element(n->schreier(), 8, rng);
    const Word g = random_word(F2, 10, rng);
    REQUIRE(n->contains(w));
    REQUIRE(n->contains(conjugate(w, g)));
    const Word u = random_word(F2, 10, rng);
    REQUIRE(n->contains(conjugate(u, g)) == n->contains(u));
  }
  const auto cert = certify(input, *n);
  CHECK(cert.n_is_normal);
  CHECK(cert.divides);
  CHECK(cert.order_f2_mod_m == cert.order_f2_mod_npn * cert.image_order_in_4_torus);
}
