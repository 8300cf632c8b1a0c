#include <doctest.h>

#include "curvecount/curve_class.hpp"
#include "curvecount/kontsevich.hpp"

using namespace curvecount;

TEST_CASE("classical counts") {
  KontsevichOracle oracle;
  CHECK(oracle.n_plane(1) == 1);
  CHECK(oracle.n_plane(2) == 1);
  CHECK(oracle.n_plane(3) == 12);
  CHECK(oracle.n_plane(4) == 620);
  CHECK(oracle.n_plane(5) == 87304);
  CHECK(oracle.n_plane(6) == 26312976);
  CHECK(oracle.n_plane(7) == ExactCount("14616808192"));
  CHECK(oracle.n_plane(8) == ExactCount("13525751027392"));
}

TEST_CASE("order of evaluation does not matter") {
  KontsevichOracle high_first;
  const ExactCount n8 = high_first.n_plane(8);
  KontsevichOracle low_first;
  for (int d = 1; d < 8; ++d) low_first.n_plane(d);
  CHECK(low_first.n_plane(8) == n8);
  CHECK(n_plane(8) == n8);
}

TEST_CASE("nonpositive degree is rejected") {
  KontsevichOracle oracle;
  CHECK_THROWS_AS(oracle.n_plane(0), InvalidQuery);
  CHECK_THROWS_AS(oracle.n_plane(-3), InvalidQuery);
}
