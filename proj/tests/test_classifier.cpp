#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/catalog.hpp"
#include "ringlab/classifier.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

using namespace ringlab;

TEST_CASE("T2(Z2) sits between UUC and CUC") {
  const auto c = classify(build(triangular(2, zn(2))));
  CHECK(c.is_USC);
  CHECK(c.is_CUSC);
  CHECK(c.is_UUC);
  CHECK_FALSE(c.is_CUC);
  CHECK_FALSE(c.is_UC);
  CHECK_FALSE(c.is_abelian);
  CHECK(c.is_quasi_duo_left == TriState::True);
  CHECK(c.is_quasi_duo_right == TriState::True);
  CHECK_FALSE(c.R_equals_ucn0);
}

TEST_CASE("Z3 is not CUSC and the witness is 2") {
  const auto c = classify(zn_ring(3));
  CHECK_FALSE(c.is_CUSC);
  REQUIRE(c.witnesses.count("is_CUSC"));
  CHECK(c.witnesses.at("is_CUSC").front() == "2");
  CHECK_FALSE(c.two_in_J);
}

TEST_CASE("small reference rings") {
  const auto z2 = classify(zn_ring(2));
  CHECK(z2.is_boolean);
  CHECK(z2.is_UC);
  CHECK(z2.is_regular);

  const auto z4 = classify(zn_ring(4));
  CHECK(z4.is_UC);
  CHECK(z4.is_local);
  CHECK(z4.two_in_J);
  CHECK_FALSE(z4.is_reduced);

  const auto f4 = classify(gf_ring(2, 2));
  CHECK(f4.is_clean);
  CHECK(f4.one_is_two_good);
  CHECK_FALSE(f4.is_UUSC);

  const auto m2 = classify(build(matrix(2, zn(2))));
  CHECK(m2.one_is_two_good);
  CHECK_FALSE(m2.is_CUSC);
  CHECK(m2.is_quasi_duo_left == TriState::False);
}

TEST_CASE("finite rings are semi-potent and potent") {
  for (const auto& e : default_catalog().entries) {
    CAPTURE(e.name);
    const auto c = classify(e.ring);
    CHECK(c.is_semi_potent);
    CHECK(c.is_potent);
    CHECK(c.is_strongly_clean);
  }
}

TEST_CASE("implication diagram holds on every catalog ring") {
  const std::pair<const char*, const char*> arrows[] = {
      {"is_UC", "is_USC"},   {"is_UC", "is_CUC"},    {"is_USC", "is_CUSC"},
      {"is_CUC", "is_CUSC"}, {"is_CUC", "is_UUC"},   {"is_UUC", "is_UUSC"},
      {"is_CUSC", "is_UUSC"}, {"is_USC", "is_strongly_clean"}, {"is_strongly_clean", "is_clean"}};
  for (const auto& e : default_catalog().entries) {
    CAPTURE(e.name);
    const auto c = classify(e.ring);
    for (const auto& [from, to] : arrows) {
      CAPTURE(from);
      CHECK((!*c.get(from) || *c.get(to)));
    }
  }
}

TEST_CASE("analysis, reading flag and JSON") {
  const auto r = build(triangular(2, zn(2)));
  const auto a = RingAnalysis::analyze(r);
  CHECK(a.radical_quotient.ring->order() == 4);
  CHECK(a.cls.is_CUSC == classify(r).is_CUSC);

  ClassifyOptions lax;
  lax.usc_reading = UscReading::AtMostOne;
  CHECK(classify(r, lax).is_USC);

  const auto j = to_json(a.cls);
  CHECK(j.begin().key() == "is_clean");
  CHECK(j["is_CUC"] == false);
  CHECK(j.contains("witnesses"));
  CHECK_FALSE(a.cls.get("nope").has_value());
}

TEST_CASE("isomorphism search") {
  const auto a = build(group_ring(zn(2), cyclic_group(2)));
  const auto b = build(trunc_poly(zn(2), 2));
  const auto map = check_isomorphic(*a, *b);
  REQUIRE(map.has_value());
  for (Elem x : a->elements())
    for (Elem y : a->elements()) {
      CHECK((*map)[a->mul(x, y)] == b->mul((*map)[x], (*map)[y]));
      CHECK((*map)[a->add(x, y)] == b->add((*map)[x], (*map)[y]));
    }
  CHECK_FALSE(check_isomorphic(*zn_ring(4), *build(product({zn(2), zn(2)}))).has_value());
  CHECK(check_isomorphic(*zn_ring(6), *build(product({zn(2), zn(3)}))).has_value());
  CHECK(check_isomorphic(*build(triangular(2, zn(2))), *build(opposite(triangular(2, zn(2))))).has_value());
}
