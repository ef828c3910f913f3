#include <doctest.h>

#include "fgcert/int_matrix.hpp"

using namespace fgcert;

TEST_CASE("products and formatting") {
  const IntMatrix a{{1, 2}, {0, 1}}, b{{1, 0}, {2, 1}};
  CHECK(a * b == IntMatrix{{5, 2}, {2, 1}});
  CHECK(to_string(a) == "[[1,2],[0,1]]");
  CHECK(a * IntVector{1, 1} == IntVector{3, 1});
  CHECK(a.transpose() == IntMatrix{{1, 0}, {2, 1}});
}

TEST_CASE("checked arithmetic throws on overflow") {
  CHECK_THROWS(checked::mul(INT64_MAX, 2));
  CHECK_THROWS(checked::add(INT64_MAX, 1));
}

TEST_CASE("integer kernel and lattices") {
  const IntMatrix m{{1, 1, 0}, {0, 0, 1}};
  const Lattice k(3, integer_kernel(m));
  CHECK(k.rank() == 1);
  CHECK(k.contains({1, -1, 0}));
  CHECK_FALSE(k.contains({1, 0, 0}));
  CHECK(k.is_saturated());
  const Lattice full(2, integer_kernel(IntMatrix(2, 2)));
  CHECK(full.rank() == 2);
  const Lattice doubled(2, IntMatrix{{2, 0}});
  CHECK_FALSE(doubled.is_saturated());
  CHECK(doubled.coordinates({4, 0}) == IntVector{2});
}

TEST_CASE("Smith invariants") {
  CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == IntVector{1, 6});
  CHECK(smith_invariants(IntMatrix{{2, 4}, {6, 8}}) == IntVector{2, 4});
}
