#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/classifier.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/invariants.hpp"

using namespace ringlab;

namespace {

Elem at(const Ring& r, std::string_view label) {
  const auto e = r.find_label(label);
  REQUIRE_MESSAGE(e.has_value(), label);
  return *e;
}

bool isomorphic(const RingHandle& a, const RingHandle& b) {
  return check_isomorphic(*a, *b).has_value();
}

}  // namespace

TEST_CASE("orders of the basic constructions") {
  CHECK(build(product({zn(2), zn(3)}))->order() == 6);
  CHECK(build(matrix(2, zn(2)))->order() == 16);
  CHECK(build(triangular(3, zn(2)))->order() == 64);
  CHECK(build(gf(2, 3))->order() == 8);
  CHECK(build(trunc_poly(zn(3), 3))->order() == 27);
  CHECK(build(group_ring(zn(2), GroupSpec{group_spec::Quaternion8{}}))->order() == 256);
  CHECK(build(trivial_extension(zn(4)))->order() == 16);
}

TEST_CASE("GF(p^k) is a field") {
  for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto r = gf_ring(p, k);
    for (Elem a = 1; a < r->order(); ++a) CHECK(oracle::is_unit(*r, a));
  }
}

TEST_CASE("product and matrix arithmetic") {
  const auto p = build(product({zn(2), zn(3)}));
  CHECK(p->mul(at(*p, "(1, 2)"), at(*p, "(1, 2)")) == at(*p, "(1, 1)"));
  const auto m = build(matrix(2, zn(2)));
  const Elem a = at(*m, "(1 1;0 1)"), b = at(*m, "(1 0;1 1)");
  CHECK(m->mul(a, b) == at(*m, "(0 1;1 1)"));
  CHECK(m->mul(b, a) == at(*m, "(1 1;1 0)"));
}

TEST_CASE("truncated polynomial encoding") {
  const auto r = trunc_poly_ring(zn_ring(2), 3);
  CHECK(r->label(2) == "x");
  CHECK(r->label(4) == "x^2");
  CHECK(r->mul(2, 2) == 4);
  CHECK(r->mul(2, 4) == 0);
  CHECK(r->mul(at(*r, "1 + x"), at(*r, "1 + x")) == at(*r, "1 + x^2"));
}

TEST_CASE("skew polynomial twist x r = alpha(r) x") {
  const auto r = build(make_spec(spec::SkewTruncPoly{gf(2, 2), Endomorphism{endo::Frobenius{2}}, 2}));
  const Elem x = at(*r, "x"), a = at(*r, "a");
  CHECK(r->mul(x, a) == at(*r, "(a+1)*x"));
  CHECK(r->mul(a, x) == at(*r, "a*x"));
  CHECK_THROWS_AS(build(make_spec(spec::SkewTruncPoly{zn(4), Endomorphism{endo::Explicit{{0, 3, 2, 1}}}, 2})),
                  ConstructionError);
}

TEST_CASE("quotients, corners and subrings") {
  const auto z8 = zn_ring(8);
  const auto q = quotient_ring(z8, ElementSet(8, {2}));
  CHECK(q.ring->order() == 2);
  CHECK(q.ideal == ElementSet(8, {0, 2, 4, 6}));
  CHECK(q.projection[5] == q.ring->one());

  const auto rq = radical_quotient_ring(build(triangular(2, zn(2))));
  CHECK(rq.ring->order() == 4);
  CHECK(isomorphic(rq.ring, build(product({zn(2), zn(2)}))));

  const auto t2 = build(triangular(2, zn(2)));
  const auto c = corner_ring(t2, at(*t2, "(1 0;0 0)"));
  CHECK(c.ring->order() == 2);
  CHECK_THROWS_AS(corner_ring(t2, at(*t2, "(0 1;0 0)")), ConstructionError);

  const auto m2 = build(matrix(2, zn(2)));
  const auto s = subring(m2, ElementSet(16, {at(*m2, "(0 1;1 1)")}));
  CHECK(s.ring->order() == 4);
  CHECK(isomorphic(s.ring, gf_ring(2, 2)));
}

TEST_CASE("group rings") {
  const auto g = group_ring_of(zn_ring(2), cyclic_group(2));
  CHECK(g.ring->order() == 4);
  CHECK(g.group.order() == 2);
  CHECK(g.augmentation_ideal.size() == 2);
  CHECK(g.coefficient_embedding[1] == g.ring->one());
  const Elem t = g.group_embedding[1];
  CHECK(g.ring->mul(t, t) == g.ring->one());
  CHECK(g.augmentation[t] == 1);
  CHECK(isomorphic(g.ring, build(trunc_poly(zn(2), 2))));
  CHECK(FiniteGroup::from_spec(GroupSpec{group_spec::Dihedral{4}}).is_p_group(2));
  CHECK_FALSE(FiniteGroup::from_spec(GroupSpec{group_spec::Symmetric3{}}).is_p_group(2));
}

TEST_CASE("extensions by bimodules") {
  const auto t = trivial_extension_ring(zn_ring(2));
  const Elem v = at(*t, "(0, 1)");
  CHECK(t->mul(v, v) == t->zero());

  const auto ft = build(make_spec(spec::FormalTriangular{zn(2), zn(2), z2_over_itself()}));
  CHECK(isomorphic(ft, build(triangular(2, zn(2)))));

  CHECK_THROWS_AS(integer_bimodule(3, *zn_ring(2), *zn_ring(2)), ConstructionError);
  CHECK(validate_bimodule(*zn_ring(4), *zn_ring(2), integer_bimodule(2, *zn_ring(4), *zn_ring(2))).ok);

  const auto ie = build(make_spec(spec::IdealExtension{zn(4), even_ideal_of_z8()}));
  CHECK(ie->order() == 16);
  const auto hyp = ideal_extension_hypotheses(*zn_ring(2), z2_over_itself());
  CHECK(hyp.idempotents_commute);

  for (const auto& n : default_catalog_specs())
    if (n.name == "Morita(Z2,Z2,Z2,Z2)") CHECK(build(n.spec)->order() == 16);
}

TEST_CASE("opposite ring reverses products") {
  const auto t2 = build(triangular(2, zn(2)));
  const auto op = opposite_ring(t2);
  for (Elem a : t2->elements())
    for (Elem b : t2->elements()) REQUIRE(op->mul(a, b) == t2->mul(b, a));
}

TEST_CASE("spec JSON round-trip and canonical names") {
  for (const auto& n : default_catalog_specs()) {
    const auto back = spec_from_json(to_json(*n.spec));
    CHECK(canonical(*back) == canonical(*n.spec));
  }
  const auto parsed = catalog_from_json(catalog_to_json(default_catalog_specs()));
  CHECK(parsed.size() == default_catalog_specs().size());
  CHECK(display_name(*triangular(2, zn(2))) == "T2(Z2)");
  CHECK(display_name(*opposite(triangular(2, zn(2)))) == "T2(Z2)^op");
}

TEST_CASE("spec errors carry the offending path") {
  auto path_of = [](const char* text) -> std::string {
    try {
      build(spec_from_json(Json::parse(text)));
    } catch (const SpecError& e) {
      return e.path();
    }
    return "no error";
  };
  CHECK(path_of(R"({"triangular":{"n":2,"base":{"zn":0}}})") == "$.triangular.base.zn");
  CHECK(path_of(R"({"product":[{"zn":2},{"foo":1}]})") == "$.product[1]");
  CHECK(path_of(R"({"corner":{"base":{"zn":6},"idempotent":2}})") == "$.corner.idempotent");
  CHECK(path_of(R"({"zn":2,"gf":{"p":2,"k":2}})") == "$");
}

TEST_CASE("size limits") {
  BuildOptions small;
  small.max_order = 100;
  CHECK_THROWS_AS(build(triangular(2, zn(8)), small), SizeExceeded);
}

TEST_CASE("default catalog composition") {
  const auto cat = default_catalog();
  CHECK(cat.entries.size() >= 25);
  std::size_t lo = 1u << 30, hi = 0;
  for (const auto& e : cat.entries) {
    lo = std::min(lo, e.ring->order());
    hi = std::max(hi, e.ring->order());
  }
  CHECK(lo == 2);
  CHECK(hi == 4096);
}
