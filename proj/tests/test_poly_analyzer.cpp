#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/poly_analyzer.hpp"

using namespace ringlab;

TEST_CASE("Z2[x] is CUSC but not clean") {
  const PolyRingView v(zn_ring(2));
  CHECK(poly_is_cusc(v).holds);
  const auto clean = poly_is_clean(v);
  CHECK_FALSE(clean.holds);
  REQUIRE_FALSE(clean.witness.empty());
  CHECK(clean.witness.front() == "x");
}

TEST_CASE("Z3[x] is not CUSC; the constant 2 has two decompositions") {
  const auto cusc = poly_is_cusc(PolyRingView(zn_ring(3)));
  CHECK_FALSE(cusc.holds);
  REQUIRE(cusc.witness.size() == 3);
  CHECK(cusc.witness[0] == "2");
}

TEST_CASE("clean set of Z4[x]") {
  const PolyRingView v(zn_ring(4));
  const auto s = poly_clean_set(v);
  CHECK(s.constant_terms == ElementSet::full(4));
  CHECK(s.higher_coefficients == ElementSet(4, {0, 2}));
  CHECK(s.constants_by_idempotent.size() == 2);
  CHECK(poly_is_cusc(v).holds);
}

TEST_CASE("unit and idempotent descriptions hold on truncations") {
  for (auto base : {zn_ring(2), zn_ring(3), zn_ring(4), gf_ring(2, 2), build(product({zn(2), zn(2)}))}) {
    const auto val = validate_poly_view(PolyRingView(base));
    CAPTURE(display_name(base->spec()));
    CHECK(val.ok);
    CHECK(val.degree >= 1);
  }
}

TEST_CASE("noncommutative base is rejected") {
  CHECK_THROWS_AS(PolyRingView(build(triangular(2, zn(2)))), Error);
}
