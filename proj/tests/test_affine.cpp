#include <doctest.h>

#include <random>

#include "fgcert/affine.hpp"
#include "fgcert/errors.hpp"

using namespace fgcert;

TEST_CASE("parameters") {
  const auto p = make_affine_params(5, 11);
  CHECK(p.xi == 3);
  CHECK(p.a == 2);
  CHECK(make_affine_params(3, 7).xi == 2);
  CHECK_THROWS_AS(make_affine_params(5, 11, 10), PreconditionError);  // order 2
  CHECK_THROWS_AS(make_affine_params(5, 13), PreconditionError);
  CHECK_THROWS_AS(make_affine_params(4, 13), PreconditionError);
  CHECK(smallest_prime_one_mod(5) == 11);
  CHECK(smallest_prime_one_mod(7) == 29);
}

TEST_CASE("AGL_1(r) as matrices") {
  for (auto [r, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 11}, {3, 7}, {7, 29}}) {
    const AffineGroup g(make_affine_params(r, p));
    CHECK(g.order() == r * (r - 1));
    CHECK(g.relations_hold());
    CHECK(g.d().power(r).is_identity());
    for (std::uint64_t a1 = 1; a1 < r; ++a1)
      for (std::uint64_t b1 = 0; b1 < r; ++b1) {
        const AffinePair x{a1, b1}, y{(a1 * 2) % r ? (a1 * 2) % r : 1, (b1 + 3) % r};
        REQUIRE(g.matrix(g.multiply(x, y)) == g.matrix(x) * g.matrix(y));
        REQUIRE(g.multiply(x, g.inverse(x)) == AffinePair{1, 0});
      }
  }
}

TEST_CASE("irreducibility and two-generation for (5, 11)") {
  const AffineGroup g(make_affine_params(5, 11, 3));
  const auto irr = irreducibility_certificate(g);
  CHECK(irr.passed());
  CHECK(irr.eigenvalues == std::vector<std::uint64_t>{3, 9, 5, 4});
  CHECK(irr.line_orbit == std::vector<std::size_t>{1, 2, 4, 3});
  const auto two = two_generation_certificate(g);
  CHECK(two.passed(g));
  CHECK(two.vandermonde_invertible);
  REQUIRE(two.copies.size() == 3);
  for (const auto& c : two.copies) CHECK(c.spun_dimension == 4);
  CHECK(two.total_dimension == 12);
  CHECK(g.gamma_order() == boost::multiprecision::pow(boost::multiprecision::cpp_int(11), 12) * 20);
}

TEST_CASE("small and larger parameters") {
  const AffineGroup g3(make_affine_params(3, 7));
  CHECK(irreducibility_certificate(g3).passed());
  CHECK(two_generation_certificate(g3).passed(g3));
  const AffineGroup g7(make_affine_params(7, 29));
  const auto two = two_generation_certificate(g7);
  CHECK(two.passed(g7));
  CHECK(two.total_dimension == 30);
}

TEST_CASE("property: Gamma is a group") {
  const AffineGroup g(make_affine_params(5, 11));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> field(0, 10), unit(1, 4), shift(0, 4);
  auto random = [&] {
    GammaElement x = gamma_identity(g);
    for (auto& v : x.w)
      for (auto& e : v) e = field(rng);
    x.delta = {unit(rng), shift(rng)};
    return x;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random(), b = random(), c = random();
    REQUIRE(gamma_multiply(g, gamma_multiply(g, a, b), c) == gamma_multiply(g, a, gamma_multiply(g, b, c)));
    REQUIRE(gamma_multiply(g, a, gamma_inverse(g, a)) == gamma_identity(g));
  }
  const auto d = d_prime(g);
  CHECK(gamma_multiply(g, gamma_power(g, d, 3), gamma_power(g, d, -3)) == gamma_identity(g));
}
