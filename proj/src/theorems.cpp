#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/group.hpp"
#include "ringlab/poly_analyzer.hpp"
#include "suite_internal.hpp"

#include <algorithm>
#include <set>

namespace ringlab::suite {

namespace {

using AnalysisPtr = std::shared_ptr<const RingAnalysis>;
using Rows = std::vector<RingVerdict>;

template <typename Node>
const Node* node_of(const SpecPtr& s) {
  return std::get_if<Node>(&s->node);
}

std::string short_name(const std::string& field) {
  return field.rfind("is_", 0) == 0 ? field.substr(3) : field;
}

Json field_witness(const RingAnalysis& a, const std::string& field) {
  Json j = {{"ring", display_name(a.ring->spec())}, {"field", field}};
  if (auto v = a.cls.get(field)) j["value"] = *v;
  if (auto it = a.cls.witnesses.find(field); it != a.cls.witnesses.end()) j["labels"] = it->second;
  return j;
}

Json values_json(const std::vector<std::pair<std::string, bool>>& conds) {
  Json j = Json::object();
  for (const auto& [name, value] : conds) j[name] = value;
  return j;
}

/// Asserts that every condition has the same truth value.
void expect_equivalent(Legs& legs, const std::vector<std::pair<std::string, bool>>& conds,
                       const std::string& what) {
  const bool first = conds.front().second;
  const bool same = std::all_of(conds.begin(), conds.end(),
                                [&](const auto& c) { return c.second == first; });
  legs.expect(same, what + " agree (all " + yes_no(first) + ")", values_json(conds));
}

std::optional<std::size_t> bounded_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && n > limit / base) return std::nullopt;
    n *= base;
  }
  if (n > limit) return std::nullopt;
  return n;
}

/// One task per catalog ring; `fn(ctx, entry, analysis)` returns its rows.
template <typename F>
void per_ring(Context& ctx, Plan& plan, F fn) {
  for (const auto& e : ctx.catalog.entries)
    plan.tasks.push_back({e.name, [&ctx, &e, fn]() -> Rows { return fn(ctx, e, *ctx.analysis(e.ring)); }});
}

struct Derived {
  std::string name;
  SpecPtr spec;
};

/// Catalog entries of one construction kind followed by extra instances.
template <typename Node>
std::vector<Derived> instances(const Context& ctx, std::vector<Derived> extra) {
  std::vector<Derived> out;
  for (const auto& e : ctx.catalog.entries)
    if (node_of<Node>(e.spec)) out.push_back({e.name, e.spec});
  for (auto& d : extra) out.push_back(std::move(d));
  return out;
}

std::vector<Elem> nonzero_idempotents(const RingAnalysis& a) {
  auto ids = a.inv.idempotents.members();
  std::erase(ids, a.ring->zero());
  return ids;
}

AnalysisPtr corner_analysis(Context& ctx, const RingAnalysis& a, Elem e) {
  if (e == a.ring->one()) return ctx.analysis(a.ring);
  return ctx.analysis(corner_ring(a.ring, e, ctx.opts.build).ring);
}

/// Name of a catalog ring S (or Z_k) with `r` isomorphic to M2(S), if any.
std::optional<std::string> matrix_shape(Context& ctx, const RingAnalysis& r) {
  if (r.cls.is_commutative || r.ring->order() > ctx.opts.matrix_corner_limit) return std::nullopt;
  std::size_t k = 1;
  while (k * k * k * k < r.ring->order()) ++k;
  if (k * k * k * k != r.ring->order() || k < 2) return std::nullopt;
  std::set<std::string> seen;
  std::vector<SpecPtr> candidates = {zn(k)};
  for (const auto& e : ctx.catalog.entries)
    if (e.ring->order() == k) candidates.push_back(e.spec);
  for (const auto& s : candidates) {
    if (!seen.insert(canonical(*s)).second) continue;
    const auto m2 = ctx.analysis(matrix(2, s));
    if (check_isomorphic(*r.ring, *m2->ring)) return display_name(*s);
  }
  return std::nullopt;
}

/// Nonzero two-sided ideals generated by single elements of `within`,
/// sorted by (size, members) and capped.
std::vector<ElementSet> principal_ideals(const Ring& r, const ElementSet& within, std::size_t cap) {
  std::vector<ElementSet> out;
  std::set<std::vector<Elem>> seen;
  within.for_each([&](Elem a) {
    if (a == r.zero()) return;
    auto ideal = ideal_generated(r, ElementSet(r.order(), {a}));
    if (seen.insert(ideal.members()).second) out.push_back(std::move(ideal));
  });
  std::sort(out.begin(), out.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members() < y.members();
  });
  if (out.size() > cap) out.resize(cap);
  return out;
}

AnalysisPtr quotient_analysis(Context& ctx, const RingAnalysis& a, const ElementSet& ideal) {
  if (ideal == a.inv.radical) return ctx.quotient_by_radical(a);
  // the least generator list keeps the cache key short
  ElementSet gens(a.ring->order());
  ElementSet span(a.ring->order());
  ideal.for_each([&](Elem x) {
    if (span.contains(x)) return;
    gens.insert(x);
    span = ideal_generated(*a.ring, gens);
  });
  return ctx.analysis(quotient_ring(a.ring, gens, ctx.opts.build).ring);
}

// ---- implication diagram ----------------------------------------------------

void plan_diagram(Context& ctx, Plan& plan) {
  plan.notes.push_back("boolean => UC is checked alongside the diagram arrows");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    static const std::pair<const char*, const char*> arrows[] = {
        {"is_UC", "is_USC"},           {"is_UC", "is_CUC"},    {"is_USC", "is_CUSC"},
        {"is_CUC", "is_CUSC"},         {"is_CUC", "is_UUC"},   {"is_UUC", "is_UUSC"},
        {"is_CUSC", "is_UUSC"},        {"is_USC", "is_strongly_clean"},
        {"is_strongly_clean", "is_clean"}, {"is_boolean", "is_UC"}};
    Legs legs(e.name);
    for (const auto& [from, to] : arrows) {
      const std::string leg = short_name(from) + " => " + short_name(to);
      if (*a.cls.get(from)) legs.expect(*a.cls.get(to), leg, field_witness(a, to));
      else legs.gated(leg, short_name(from) + " false");
    }
    return {legs.finish()};
  });
}

// ---- worked examples ----------------------------------------------------------

void plan_ex14(Context& ctx, Plan& plan) {
  plan.notes.push_back("Z[x] has an infinite base ring and is outside the finite model");
  plan.tasks.push_back({"Z2[x]", [&ctx]() -> Rows {
    PolyRingView view(build(zn(2), ctx.opts.build));
    Legs legs("Z2[x]");
    const auto val = validate_poly_view(view);
    legs.expect(val.ok, "unit and idempotent descriptions verified to degree " +
                            std::to_string(val.degree), Json{{"detail", val.detail}});
    const auto cusc = poly_is_cusc(view);
    legs.expect(cusc.holds, "CUSC", Json(cusc.witness));
    const auto clean = poly_is_clean(view);
    legs.expect(!clean.holds, "not clean, so not USC", Json(clean.witness));
    if (!clean.witness.empty()) legs.note("unclean polynomial " + clean.witness.front());
    return {legs.finish()};
  }});
  plan.tasks.push_back({"Z[x]", []() -> Rows {
    return {skipped_row("Z[x]", "infinite base ring; no finite surrogate")};
  }});
  plan.tasks.push_back({"T2(Z2)", [&ctx]() -> Rows {
    const auto a = ctx.analysis(triangular(2, zn(2)));
    Legs legs("T2(Z2)");
    legs.expect(a->cls.is_UUC, "UUC", field_witness(*a, "is_UUC"));
    legs.expect(a->cls.is_CUSC, "CUSC", field_witness(*a, "is_CUSC"));
    legs.expect(!a->cls.is_CUC, "not CUC", field_witness(*a, "is_CUC"));
    const auto e = a->ring->find_label("(1 0;0 0)");
    legs.expect(e && a->inv.idempotents.contains(*e) && !a->inv.center.contains(*e),
                "(1 0;0 0) is a non-central idempotent", Json{{"element", "(1 0;0 0)"}});
    return {legs.finish()};
  }});
}

void plan_ex23(Context& ctx, Plan& plan) {
  plan.notes.push_back("rings with only trivial idempotents: CUSC and UUSC both match 1 not 2-good");
  plan.notes.push_back("commutative USC rings R: T_n(R) is USC and CUSC but never CUC");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    Rows rows;
    Legs legs(e.name);
    if (a.inv.idempotents.size() == 2) {
      const bool not_two_good = !a.cls.one_is_two_good;
      legs.expect(a.cls.is_CUSC == not_two_good, "CUSC iff 1 not 2-good", field_witness(a, "is_CUSC"));
      legs.expect(a.cls.is_UUSC == not_two_good, "UUSC iff 1 not 2-good", field_witness(a, "is_UUSC"));
    } else {
      legs.gated("2-good criterion", "nontrivial idempotents");
    }
    rows.push_back(legs.finish());
    if (!a.cls.is_commutative || !a.cls.is_USC) return rows;
    for (std::size_t n = 2; n <= ctx.opts.tn_max; ++n) {
      const auto spec = triangular(n, e.spec);
      const std::string name = e.name + " -> " + display_name(*spec);
      if (!bounded_pow(a.ring->order(), n * (n + 1) / 2, ctx.opts.derived_limit)) {
        rows.push_back(skipped_row(name, "order above the derived-ring limit"));
        continue;
      }
      const auto t = ctx.analysis(spec);
      Legs tl(name);
      tl.expect(t->cls.is_USC, "USC", field_witness(*t, "is_USC"));
      tl.expect(t->cls.is_CUSC, "CUSC", field_witness(*t, "is_CUSC"));
      tl.expect(!t->cls.is_CUC, "not CUC", field_witness(*t, "is_CUC"));
      rows.push_back(tl.finish());
    }
    return rows;
  });
}

// ---- abelian and local equivalences -----------------------------------------

void plan_prop21(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_abelian) return {na_row(e.name, "not abelian")};
    const auto ids = nonzero_idempotents(a);
    const bool meet_trivial =
        std::none_of(ids.begin(), ids.end(), [&](Elem x) { return a.inv.two_good.contains(x); });
    Legs legs(e.name);
    expect_equivalent(legs,
                      {{"(U+U) meets Id only in 0", meet_trivial},
                       {"UUSC", a.cls.is_UUSC},
                       {"UUC", a.cls.is_UUC},
                       {"CUC", a.cls.is_CUC},
                       {"CUSC", a.cls.is_CUSC}},
                      "five conditions");
    return {legs.finish()};
  });
}

void plan_prop22(Context& ctx, Plan& plan) {
  plan.notes.push_back("asserted on every ring; outside local rings all seven conditions are false");
  plan.notes.push_back("R/J is Z2 exactly when it has two elements");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    const auto& c = a.cls;
    const bool trivial_id = a.inv.idempotents.size() == 2;
    Legs legs(e.name);
    expect_equivalent(legs,
                      {{"CUSC and local", c.is_CUSC && c.is_local},
                       {"R/J = Z2", a.radical_quotient.ring->order() == 2},
                       {"UC and local", c.is_UC && c.is_local},
                       {"UC with Id = {0,1}", c.is_UC && trivial_id},
                       {"USC and local", c.is_USC && c.is_local},
                       {"USC with Id = {0,1}", c.is_USC && trivial_id},
                       {"CUC and local", c.is_CUC && c.is_local}},
                      "seven conditions");
    if (c.is_local) legs.note("local");
    return {legs.finish()};
  });
}

// ---- subrings, products, quotients --------------------------------------------

void plan_prop24(Context& ctx, Plan& plan) {
  plan.notes.push_back("subrings scanned: corners eRe (identity e) and unital subrings generated by one element");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    const auto& c = a.cls;
    if (!c.is_CUSC && !c.is_UUSC) return {na_row(e.name, "neither CUSC nor UUSC")};
    if (a.ring->order() > ctx.opts.scan_limit)
      return {skipped_row(e.name, "order above the subring scan limit")};
    Legs legs(e.name);
    std::size_t corners = 0, subrings = 0;
    auto check = [&](const RingAnalysis& s, const std::string& what) {
      if (c.is_CUSC) legs.expect(s.cls.is_CUSC, what + " CUSC", field_witness(s, "is_CUSC"));
      if (c.is_UUSC) legs.expect(s.cls.is_UUSC, what + " UUSC", field_witness(s, "is_UUSC"));
    };
    for (Elem x : nonzero_idempotents(a)) {
      if (x == a.ring->one()) continue;
      check(*corner_analysis(ctx, a, x), "corner at " + a.ring->label(x));
      ++corners;
    }
    if (a.ring->order() <= ctx.opts.subring_limit) {
      std::set<std::vector<Elem>> seen;
      for (Elem x : a.ring->elements()) {
        auto sub = subring(a.ring, ElementSet(a.ring->order(), {x}), ctx.opts.build);
        auto key = sub.embedding;
        std::sort(key.begin(), key.end());
        if (key.size() == a.ring->order() || !seen.insert(key).second) continue;
        check(*ctx.analysis(sub.ring), "subring generated by " + a.ring->label(x));
        ++subrings;
      }
    }
    auto v = legs.finish();
    v.detail = std::to_string(corners) + " proper corners, " + std::to_string(subrings) +
               " proper subrings; " + (v.verdict == Verdict::Fail ? v.detail : "all inherit the property");
    if (corners + subrings == 0) {
      v.verdict = Verdict::NotApplicable;
      v.detail = "no proper corners or subrings";
    }
    return {v};
  });
}

void plan_prop25(Context& ctx, Plan& plan) {
  const auto z2 = zn(2), z3 = zn(3), z4 = zn(4);
  auto items = instances<spec::Product>(
      ctx, {{"Z2xZ3", product({z2, z3})},
            {"Z3xZ4", product({z3, z4})},
            {"Z2xZ2xZ2", product({z2, z2, z2})},
            {"Z2xT2(Z2)", product({z2, triangular(2, z2)})},
            {"Z4xF4", product({z4, gf(2, 2)})},
            {"T2(Z2)xZ2C2", product({triangular(2, z2), group_ring(z2, cyclic_group(2))})}});
  for (const auto& d : items) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto p = ctx.analysis(d.spec);
      bool cusc = true, uusc = true;
      for (const auto& f : node_of<spec::Product>(d.spec)->factors) {
        const auto fa = ctx.analysis(f);
        cusc = cusc && fa->cls.is_CUSC;
        uusc = uusc && fa->cls.is_UUSC;
      }
      Legs legs(d.name);
      legs.expect(p->cls.is_CUSC == cusc, "CUSC iff every factor is (" + yes_no(cusc) + ")",
                  field_witness(*p, "is_CUSC"));
      legs.expect(p->cls.is_UUSC == uusc, "UUSC iff every factor is (" + yes_no(uusc) + ")",
                  field_witness(*p, "is_UUSC"));
      return {legs.finish()};
    }});
  }
  plan.tasks.push_back({"Z6", [&ctx]() -> Rows {
    const auto z6 = ctx.analysis(zn(6));
    const auto prod = ctx.analysis(product({zn(2), zn(3)}));
    Legs legs("Z6");
    const bool iso = check_isomorphic(*z6->ring, *prod->ring).has_value();
    legs.expect(iso, "isomorphic to Z2xZ3");
    const bool parts = ctx.analysis(zn(2))->cls.is_CUSC && ctx.analysis(zn(3))->cls.is_CUSC;
    legs.expect(z6->cls.is_CUSC == parts, "CUSC iff Z2 and Z3 are (" + yes_no(parts) + ")",
                field_witness(*z6, "is_CUSC"));
    return {legs.finish()};
  }});
}

void plan_cor26(Context& ctx, Plan& plan) {
  plan.notes.push_back("R embeds in R/I x R/K whenever I and K are ideals meeting in 0");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (a.ring->order() > ctx.opts.subring_limit)
      return {skipped_row(e.name, "order above the ideal scan limit")};
    const auto ideals =
        principal_ideals(*a.ring, ElementSet::full(a.ring->order()), ctx.opts.ideal_scan_cap);
    Legs legs(e.name);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = i + 1; j < ideals.size(); ++j) {
        if ((ideals[i] & ideals[j]).size() != 1) continue;
        ++pairs;
        const auto qi = quotient_analysis(ctx, a, ideals[i]);
        const auto qj = quotient_analysis(ctx, a, ideals[j]);
        const std::string what = "ideals of sizes " + std::to_string(ideals[i].size()) + " and " +
                                 std::to_string(ideals[j].size());
        if (qi->cls.is_CUSC && qj->cls.is_CUSC)
          legs.expect(a.cls.is_CUSC, what + ": CUSC quotients give CUSC", field_witness(a, "is_CUSC"));
        else
          legs.gated(what + " CUSC", "a quotient is not CUSC");
        if (qi->cls.is_UUSC && qj->cls.is_UUSC)
          legs.expect(a.cls.is_UUSC, what + ": UUSC quotients give UUSC", field_witness(a, "is_UUSC"));
        else
          legs.gated(what + " UUSC", "a quotient is not UUSC");
      }
    if (pairs == 0) return {na_row(e.name, "no pair of nonzero ideals meeting in 0")};
    return {legs.finish()};
  });
}

void plan_cor27(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    const Ring& r = *a.ring;
    Legs legs(e.name);
    bool any = false;
    for (Elem x : nonzero_idempotents(a)) {
      const Elem y = r.sub(r.one(), x);
      if (x == r.one() || !a.inv.center.contains(x) || y < x) continue;
      any = true;
      const auto ex = corner_analysis(ctx, a, x), ey = corner_analysis(ctx, a, y);
      const std::string what = "e = " + r.label(x);
      legs.expect(a.cls.is_CUSC == (ex->cls.is_CUSC && ey->cls.is_CUSC), what + ": CUSC splits",
                  Json::array({field_witness(a, "is_CUSC"), field_witness(*ex, "is_CUSC"),
                               field_witness(*ey, "is_CUSC")}));
      legs.expect(a.cls.is_UUSC == (ex->cls.is_UUSC && ey->cls.is_UUSC), what + ": UUSC splits",
                  Json::array({field_witness(a, "is_UUSC"), field_witness(*ex, "is_UUSC"),
                               field_witness(*ey, "is_UUSC")}));
    }
    if (!any) return {na_row(e.name, "no nontrivial central idempotent")};
    return {legs.finish()};
  });
}

void plan_lemma28(Context& ctx, Plan& plan) {
  plan.notes.push_back("ideals inside J: J itself and the ideals generated by single elements of J");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (a.inv.radical.size() == 1) return {na_row(e.name, "J = 0")};
    std::vector<ElementSet> ideals = {a.inv.radical};
    if (a.ring->order() <= ctx.opts.scan_limit)
      for (auto& i : principal_ideals(*a.ring, a.inv.radical, ctx.opts.ideal_scan_cap))
        if (!(i == a.inv.radical)) ideals.push_back(std::move(i));
    Legs legs(e.name);
    std::size_t forward = 0, converse_uusc = 0, converse_cusc = 0;
    for (const auto& ideal : ideals) {
      const auto q = quotient_analysis(ctx, a, ideal);
      const bool lifts = idempotents_lift_mod(*a.ring, a.inv.idempotents, ideal).lifts;
      const std::string what = "I of size " + std::to_string(ideal.size());
      auto w = [&](const char* field) {
        return Json::array({field_witness(a, field), field_witness(*q, field)});
      };
      if (q->cls.is_UUSC) {
        legs.expect(a.cls.is_UUSC, what + ": R/I UUSC gives R UUSC", w("is_UUSC"));
        ++forward;
      }
      if (a.cls.is_abelian && lifts) {
        legs.expect(!a.cls.is_UUSC || q->cls.is_UUSC, what + ": R UUSC gives R/I UUSC", w("is_UUSC"));
        ++converse_uusc;
      }
      if (q->cls.is_CUSC && a.cls.is_abelian)
        legs.expect(a.cls.is_CUSC, what + ": R/I CUSC gives R CUSC", w("is_CUSC"));
      if (lifts) {
        legs.expect(!a.cls.is_CUSC || q->cls.is_CUSC, what + ": R CUSC gives R/I CUSC", w("is_CUSC"));
        ++converse_cusc;
      }
    }
    auto v = legs.finish();
    if (v.verdict != Verdict::Fail)
      v.detail = std::to_string(ideals.size()) + " ideals; " + std::to_string(forward) +
                 " with UUSC quotient; UUSC converse exercised " + std::to_string(converse_uusc) +
                 " times, CUSC converse " + std::to_string(converse_cusc) + " times" +
                 (a.cls.is_abelian ? "" : "; R not abelian, so the abelian-gated directions were skipped");
    return {v};
  });
}

// ---- extensions -------------------------------------------------------------

ModuleTables bimodule(std::size_t k, const SpecPtr& a, const SpecPtr& b) {
  return integer_bimodule(k, *build(a), *build(b));
}

std::vector<Derived> trivial_extension_instances(const Context& ctx) {
  return instances<spec::TrivialExtension>(
      ctx, {{"T(Z3)", trivial_extension(zn(3))},
            {"T(T2(Z2))", trivial_extension(triangular(2, zn(2)))},
            {"T(M2(Z2))", trivial_extension(matrix(2, zn(2)))}});
}

void plan_cor214(Context& ctx, Plan& plan) {
  plan.notes.push_back("power series quotients A[[x]]/(x^n) coincide with A[x]/(x^n) on finite rings");
  plan.notes.push_back("the power series ring itself is infinite and is covered through these quotients");
  const auto z2 = zn(2), z3 = zn(3);
  std::vector<std::pair<Derived, std::vector<SpecPtr>>> rows;
  for (const auto& d : instances<spec::TruncPoly>(
           ctx, {{"Z3[x]/x^2", trunc_poly(z3, 2)},
                 {"F4[x]/x^2", trunc_poly(gf(2, 2), 2)},
                 {"T2(Z2)[x]/x^2", trunc_poly(triangular(2, z2), 2)},
                 {"M2(Z2)[x]/x^2", trunc_poly(matrix(2, z2), 2)}}))
    rows.push_back({d, {node_of<spec::TruncPoly>(d.spec)->base}});
  for (const auto& d : trivial_extension_instances(ctx))
    rows.push_back({d, {node_of<spec::TrivialExtension>(d.spec)->base}});
  for (const auto& d : instances<spec::FormalTriangular>(
           ctx, {{"FT(Z2,0,Z3)", make_spec(spec::FormalTriangular{z2, z3, zero_module(2, 3)})},
                 {"FT(Z3,Z3,Z3)", make_spec(spec::FormalTriangular{z3, z3, bimodule(3, z3, z3)})}})) {
    const auto* ft = node_of<spec::FormalTriangular>(d.spec);
    rows.push_back({d, {ft->a, ft->b}});
  }
  for (const auto& d : instances<spec::Triangular>(
           ctx, {{"T2(Z3)", triangular(2, z3)},
                 {"T3(Z3)", triangular(3, z3)},
                 {"T2(F4)", triangular(2, gf(2, 2))},
                 {"T2(T2(Z2))", triangular(2, triangular(2, z2))}}))
    rows.push_back({d, {node_of<spec::Triangular>(d.spec)->base}});

  for (const auto& [d, parts] : rows) {
    plan.tasks.push_back({d.name, [&ctx, d, parts]() -> Rows {
      const auto whole = ctx.analysis(d.spec);
      bool expected = true;
      std::string names;
      for (const auto& p : parts) {
        expected = expected && ctx.analysis(p)->cls.is_UUSC;
        names += (names.empty() ? "" : " and ") + display_name(*p);
      }
      Legs legs(d.name);
      legs.expect(whole->cls.is_UUSC == expected,
                  "UUSC iff " + names + " UUSC (" + yes_no(expected) + ")",
                  field_witness(*whole, "is_UUSC"));
      if (const auto* ft = node_of<spec::FormalTriangular>(d.spec);
          ft && d.name == "FT(Z2,Z2,Z2)") {
        const auto t2 = ctx.analysis(triangular(2, zn(2)));
        legs.expect(check_isomorphic(*whole->ring, *t2->ring).has_value(), "isomorphic to T2(Z2)");
      }
      return {legs.finish()};
    }});
  }
}

void plan_cor_skew(Context& ctx, Plan& plan) {
  const auto f4 = gf(2, 2);
  const auto z2sq = product({zn(2), zn(2)});
  for (const auto& d : instances<spec::SkewTruncPoly>(
           ctx,
           {{"F4[x;frob2]/x^3", make_spec(spec::SkewTruncPoly{f4, Endomorphism{endo::Frobenius{2}}, 3})},
            {"F8[x;frob2]/x^2",
             make_spec(spec::SkewTruncPoly{gf(2, 3), Endomorphism{endo::Frobenius{2}}, 2})},
            {"(Z2xZ2)[x;swap]/x^2",
             make_spec(spec::SkewTruncPoly{z2sq, Endomorphism{endo::Explicit{{0, 2, 1, 3}}}, 2})},
            {"Z3[x;id]/x^2", make_spec(spec::SkewTruncPoly{zn(3), Endomorphism{endo::Identity{}}, 2})},
            {"Z4[x;id]/x^3", make_spec(spec::SkewTruncPoly{zn(4), Endomorphism{endo::Identity{}}, 3})}})) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto whole = ctx.analysis(d.spec);
      const auto base = ctx.analysis(node_of<spec::SkewTruncPoly>(d.spec)->base);
      Legs legs(d.name);
      legs.expect(whole->cls.is_UUSC == base->cls.is_UUSC,
                  "UUSC iff the base is (" + yes_no(base->cls.is_UUSC) + ")",
                  Json::array({field_witness(*whole, "is_UUSC"), field_witness(*base, "is_UUSC")}));
      return {legs.finish()};
    }});
  }
}

void plan_cor_morita(Context& ctx, Plan& plan) {
  plan.notes.push_back("contexts are realized as T(AxB, M+N)");
  const auto z2 = zn(2), z3 = zn(3), z4 = zn(4);
  for (const auto& d : instances<spec::TrivialMorita>(
           ctx, {{"Morita(Z2,Z3,0,0)",
                  make_spec(spec::TrivialMorita{z2, z3, zero_module(2, 3), zero_module(3, 2)})},
                 {"Morita(Z4,Z2,Z2,Z2)",
                  make_spec(spec::TrivialMorita{z4, z2, bimodule(2, z4, z2), bimodule(2, z2, z4)})},
                 {"Morita(Z3,Z3,Z3,Z3)",
                  make_spec(spec::TrivialMorita{z3, z3, bimodule(3, z3, z3), bimodule(3, z3, z3)})}})) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto* m = node_of<spec::TrivialMorita>(d.spec);
      const auto whole = ctx.analysis(d.spec);
      const bool expected = ctx.analysis(m->a)->cls.is_UUSC && ctx.analysis(m->b)->cls.is_UUSC;
      Legs legs(d.name);
      legs.expect(whole->cls.is_UUSC == expected,
                  "UUSC iff both corners are (" + yes_no(expected) + ")",
                  field_witness(*whole, "is_UUSC"));
      return {legs.finish()};
    }});
  }
}

void plan_prop_tav(Context& ctx, Plan& plan) {
  for (const auto& d : trivial_extension_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto* t = node_of<spec::TrivialExtension>(d.spec);
      const auto whole = ctx.analysis(d.spec);
      const auto base = ctx.analysis(t->base);
      const auto v = t->v ? *t->v : regular_bimodule(*base->ring);
      Legs legs(d.name);
      auto w = Json::array({field_witness(*whole, "is_CUSC"), field_witness(*base, "is_CUSC")});
      legs.expect(!whole->cls.is_CUSC || base->cls.is_CUSC, "T(A,V) CUSC gives A CUSC", w);
      if (idempotents_commute_with(*base->ring, v))
        legs.expect(!base->cls.is_CUSC || whole->cls.is_CUSC, "A CUSC gives T(A,V) CUSC", w);
      else
        legs.gated("A CUSC gives T(A,V) CUSC", "an idempotent of A does not commute with V");
      return {legs.finish()};
    }});
  }
}

std::vector<Derived> ideal_extension_instances(const Context& ctx) {
  auto z9 = zn_ring(9), z3 = zn_ring(3);
  auto nine = ideal_module(*z9, ElementSet(9, {0, 3, 6}), *z3, {0, 1, 2});
  const auto t2 = triangular(2, zn(2));
  auto t2r = build(t2);
  auto rad = ideal_module(*t2r, jacobson_radical(*t2r), *t2r, [&] {
    std::vector<Elem> id(t2r->order());
    for (Elem x : t2r->elements()) id[x] = x;
    return id;
  }());
  return instances<spec::IdealExtension>(
      ctx, {{"I(Z3,3Z9)", make_spec(spec::IdealExtension{zn(3), std::move(nine)})},
            {"I(T2(Z2),J)", make_spec(spec::IdealExtension{t2, std::move(rad)})}});
}

void plan_prop218(Context& ctx, Plan& plan) {
  plan.notes.push_back("the CUSC form is checked alongside the UUSC form");
  for (const auto& d : ideal_extension_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto whole = ctx.analysis(d.spec);
      const auto base = ctx.analysis(node_of<spec::IdealExtension>(d.spec)->base);
      Legs legs(d.name);
      for (const char* f : {"is_UUSC", "is_CUSC"}) {
        const bool w = *whole->cls.get(f), b = *base->cls.get(f);
        legs.expect(!w || b, "I(R,M) " + short_name(f) + " gives R " + short_name(f),
                    Json::array({field_witness(*whole, f), field_witness(*base, f)}));
      }
      return {legs.finish()};
    }});
  }
}

void plan_prop219(Context& ctx, Plan& plan) {
  plan.notes.push_back("asserted only when every hypothesis is verified on the data");
  for (const auto& d : ideal_extension_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto* node = node_of<spec::IdealExtension>(d.spec);
      const auto whole = ctx.analysis(d.spec);
      const auto base = ctx.analysis(node->base);
      const auto hyp = ideal_extension_hypotheses(*base->ring, node->m);
      Legs legs(d.name);
      for (const char* f : {"is_UUSC", "is_CUSC"}) {
        const std::string leg = "R " + short_name(f) + " gives I(R,M) " + short_name(f);
        if (!*base->cls.get(f)) legs.gated(leg, "R not " + short_name(f));
        else if (!hyp.idempotents_commute) legs.gated(leg, "idempotents do not commute with M");
        else if (!hyp.quasi_regular) legs.gated(leg, "M not quasi-regular");
        else legs.expect(*whole->cls.get(f), leg, field_witness(*whole, f));
      }
      if (!hyp.detail.empty()) legs.note(hyp.detail);
      return {legs.finish()};
    }});
  }
}

// ---- main theorems ------------------------------------------------------------

void plan_thm31(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_semi_potent) return {na_row(e.name, "not semi-potent")};
    const Ring& r = *a.ring;
    const auto rq = ctx.quotient_by_radical(a);
    bool exists_all = true, unique_all = true;
    Json offender;
    a.inv.units.for_each([&](Elem u) {
      std::size_t count = 0;
      a.inv.idempotents.for_each([&](Elem x) { count += a.inv.radical.contains(r.sub(u, x)); });
      if (count == 0) exists_all = false;
      if (count != 1) {
        unique_all = false;
        if (offender.is_null()) offender = Json{{"unit", r.label(u)}, {"idempotents", count}};
      }
    });
    Legs legs(e.name);
    expect_equivalent(legs,
                      {{"R/J UUSC", rq->cls.is_UUSC},
                       {"R/J Boolean", a.cls.RmodJ_boolean},
                       {"U = 1 + J", a.cls.U_equals_one_plus_J},
                       {"U inside ucn0", a.inv.units.is_subset_of(a.inv.ucn0)},
                       {"each unit is e + j for a unique e", unique_all},
                       {"each unit is e + j for some e", exists_all}},
                      "six conditions");
    if (!offender.is_null()) legs.note("first unit without a unique e: " + offender.dump());
    return {legs.finish()};
  });
}

void plan_cor_quasi_duo(Context& ctx, Plan& plan) {
  plan.notes.push_back("quasi-duo is decided on R/J from its maximal one-sided ideals");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_potent || !a.cls.is_UUSC) return {na_row(e.name, "not a potent UUSC ring")};
    if (a.cls.is_quasi_duo_left == TriState::Skipped || a.cls.is_quasi_duo_right == TriState::Skipped)
      return {skipped_row(e.name, "ideal lattice over its limit")};
    Legs legs(e.name);
    legs.expect(a.cls.is_quasi_duo_left == TriState::True, "left quasi-duo",
                field_witness(a, "is_quasi_duo_left"));
    legs.expect(a.cls.is_quasi_duo_right == TriState::True, "right quasi-duo",
                field_witness(a, "is_quasi_duo_right"));
    return {legs.finish()};
  });
}

void plan_cor32(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_regular) return {na_row(e.name, "not regular")};
    Legs legs(e.name);
    expect_equivalent(legs, {{"UUSC", a.cls.is_UUSC}, {"Boolean", a.cls.is_boolean}}, "UUSC and Boolean");
    return {legs.finish()};
  });
}

void plan_prop33(Context& ctx, Plan& plan) {
  plan.notes.push_back(
      "under the exactly-one reading a clean element with no commuting decomposition breaks CUSC; "
      "rows report whether any such element exists");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    Legs legs(e.name);
    expect_equivalent(legs, {{"USC", a.cls.is_USC}, {"clean and CUSC", a.cls.is_clean && a.cls.is_CUSC}},
                      "USC and clean-with-CUSC");
    legs.note(a.cls.is_strongly_clean ? "strongly clean, so the USC readings coincide"
                                      : "some element lacks a commuting decomposition");
    return {legs.finish()};
  });
}

void plan_thm34(Context& ctx, Plan& plan) {
  plan.notes.push_back("finite rings are potent, so CUSC and USC cannot separate here");
  plan.notes.push_back("the separating example Z2[x] is checked through the polynomial analyzer");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    Legs legs(e.name);
    expect_equivalent(legs, {{"USC", a.cls.is_USC}, {"CUSC and potent", a.cls.is_CUSC && a.cls.is_potent}},
                      "USC and potent-with-CUSC");
    return {legs.finish()};
  });
  plan.tasks.push_back({"Z2[x]", [&ctx]() -> Rows {
    PolyRingView view(build(zn(2), ctx.opts.build));
    Legs legs("Z2[x]");
    const auto cusc = poly_is_cusc(view);
    const auto clean = poly_is_clean(view);
    legs.expect(cusc.holds && !clean.holds, "CUSC but not clean, hence not USC and not potent",
                Json{{"cusc", cusc.witness}, {"clean", clean.witness}});
    return {legs.finish()};
  }});
}

void plan_cor35(Context& ctx, Plan& plan) {
  plan.notes.push_back("the exchange property is not decided separately; finite rings are exchange rings");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_CUSC) return {na_row(e.name, "not CUSC")};
    Legs legs(e.name);
    expect_equivalent(legs,
                      {{"clean", a.cls.is_clean},
                       {"potent", a.cls.is_potent},
                       {"USC", a.cls.is_USC},
                       {"strongly clean", a.cls.is_strongly_clean}},
                      "four decidable conditions");
    return {legs.finish()};
  });
}

void plan_cor36(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    const auto rq = ctx.quotient_by_radical(a);
    Legs legs(e.name);
    expect_equivalent(legs,
                      {{"semi-boolean", a.cls.is_semi_boolean},
                       {"potent with R/J UUSC", a.cls.is_potent && rq->cls.is_UUSC}},
                      "semi-boolean and potent-with-UUSC-quotient");
    return {legs.finish()};
  });
}

void plan_cor38(Context& ctx, Plan& plan) {
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.R_equals_ucn0) return {na_row(e.name, "R differs from ucn0(R)")};
    Legs legs(e.name);
    legs.expect(a.cls.is_USC, "R = ucn0(R) gives USC", field_witness(a, "is_USC"));
    return {legs.finish()};
  });
  plan.tasks.push_back({"T2(Z2) converse", [&ctx]() -> Rows {
    const auto a = ctx.analysis(triangular(2, zn(2)));
    const auto x = a->ring->find_label("(1 1;0 0)");
    Legs legs("T2(Z2) converse");
    legs.expect(a->cls.is_USC, "USC", field_witness(*a, "is_USC"));
    legs.expect(x && !a->inv.ucn0.contains(*x), "(1 1;0 0) outside ucn0",
                Json{{"element", "(1 1;0 0)"}});
    return {legs.finish()};
  }});
}

void plan_thm39(Context& ctx, Plan& plan) {
  plan.notes.push_back("CUSC rings are UUSC, so the UUSC hypothesis covers both forms");
  per_ring(ctx, plan, [](Context&, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_UUSC || !a.cls.is_semi_potent) return {na_row(e.name, "not a semi-potent UUSC ring")};
    Legs legs(e.name);
    legs.expect(a.cls.two_in_J, "2 in J", field_witness(a, "two_in_J"));
    return {legs.finish()};
  });
}

void plan_thm310(Context& ctx, Plan& plan) {
  plan.notes.push_back("matrix-shaped corners are searched among M2(S) for catalog rings S, "
                       "for corners of order at most the matrix corner limit");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_UUSC) return {na_row(e.name, "not UUSC (CUSC rings are UUSC)")};
    Legs legs(e.name);
    legs.expect(!a.cls.one_is_two_good, "1 not 2-good", field_witness(a, "one_is_two_good"));

    auto corner_legs = [&](const RingAnalysis& ring, const std::string& where) {
      std::size_t checked = 0, shaped = 0;
      std::optional<Json> bad_sum, bad_shape;
      for (Elem x : nonzero_idempotents(ring)) {
        const auto c = corner_analysis(ctx, ring, x);
        ++checked;
        if (c->inv.two_good.contains(c->ring->one()) && !bad_sum)
          bad_sum = Json{{"idempotent", ring.ring->label(x)}, {"ring", where}};
        if (auto s = matrix_shape(ctx, *c)) {
          ++shaped;
          if (!bad_shape) bad_shape = Json{{"idempotent", ring.ring->label(x)}, {"M2 over", *s}};
        }
      }
      legs.expect(!bad_sum, "no corner of " + where + " has its identity 2-good (" +
                                std::to_string(checked) + " idempotents)",
                  bad_sum.value_or(Json()));
      legs.expect(!bad_shape, "no corner of " + where + " is a 2x2 matrix ring",
                  bad_shape.value_or(Json()));
      (void)shaped;
    };
    corner_legs(a, "R");
    const auto rq = ctx.quotient_by_radical(a);
    legs.expect(!rq->inv.two_good.contains(rq->ring->one()), "identity of R/J not 2-good",
                field_witness(*rq, "one_is_two_good"));
    if (a.cls.is_potent) corner_legs(*rq, "R/J");
    else legs.gated("corners of R/J", "not potent");
    return {legs.finish()};
  });
}

void plan_thm311(Context& ctx, Plan& plan) {
  plan.notes.push_back("T_n(R) is built for n up to the configured bound while its order fits");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (!a.cls.is_commutative) return {na_row(e.name, "not commutative")};
    if (!a.cls.is_semi_potent) return {na_row(e.name, "not semi-potent")};
    Rows rows;
    for (std::size_t n = 2; n <= ctx.opts.tn_max; ++n) {
      const auto spec = triangular(n, e.spec);
      const std::string name = e.name + " -> " + display_name(*spec);
      if (!bounded_pow(a.ring->order(), n * (n + 1) / 2, ctx.opts.derived_limit)) {
        rows.push_back(skipped_row(name, "order above the derived-ring limit"));
        continue;
      }
      const auto t = ctx.analysis(spec);
      Legs legs(name);
      expect_equivalent(legs,
                        {{"R CUSC", a.cls.is_CUSC}, {"R CUC", a.cls.is_CUC}, {"T_n(R) CUSC", t->cls.is_CUSC}},
                        "CUSC, CUC and triangular CUSC");
      rows.push_back(legs.finish());
    }
    return rows;
  });
}

// ---- group rings ----------------------------------------------------------------

std::vector<Derived> group_ring_instances(const Context& ctx) {
  return instances<spec::GroupRing>(
      ctx, {{"Z3C3", group_ring(zn(3), cyclic_group(3))},
            {"F4C2", group_ring(gf(2, 2), cyclic_group(2))},
            {"Z2C6", group_ring(zn(2), cyclic_group(6))},
            {"Z2D4", group_ring(zn(2), GroupSpec{group_spec::Dihedral{4}})}});
}

struct GroupRingFacts {
  AnalysisPtr whole;
  AnalysisPtr base;
  bool two_group = false;
  bool idempotents_in_base = false;
  std::string group;
};

GroupRingFacts group_ring_facts(Context& ctx, const Derived& d) {
  const auto* g = node_of<spec::GroupRing>(d.spec);
  GroupRingFacts f;
  f.whole = ctx.analysis(d.spec);
  f.base = ctx.analysis(g->base);
  const auto group = FiniteGroup::from_spec(g->group);
  f.two_group = group.is_p_group(2);
  f.group = display_name(g->group);
  // r·1_G has id r·|R|^(identity)
  std::size_t scale = 1;
  for (Elem i = 0; i < group.identity(); ++i) scale *= f.base->ring->order();
  ElementSet coeffs(f.whole->ring->order());
  for (Elem r : f.base->ring->elements()) coeffs.insert(static_cast<Elem>(r * scale));
  f.idempotents_in_base = f.whole->inv.idempotents.is_subset_of(coeffs);
  return f;
}

void plan_lemma41(Context& ctx, Plan& plan) {
  plan.notes.push_back("the hypothesis Id(RG) inside R is checked directly");
  for (const auto& d : group_ring_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto f = group_ring_facts(ctx, d);
      if (!f.idempotents_in_base) return {na_row(d.name, "RG has idempotents outside R")};
      Legs legs(d.name);
      for (const char* field : {"is_CUSC", "is_UUSC"}) {
        const bool w = *f.whole->cls.get(field), b = *f.base->cls.get(field);
        legs.expect(w == b, short_name(field) + " iff R is (" + yes_no(b) + ")",
                    Json::array({field_witness(*f.whole, field), field_witness(*f.base, field)}));
      }
      return {legs.finish()};
    }});
  }
}

void plan_prop44(Context& ctx, Plan& plan) {
  for (const auto& d : group_ring_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto f = group_ring_facts(ctx, d);
      if (!f.two_group) return {na_row(d.name, f.group + " is not a 2-group")};
      if (!f.base->cls.is_UUSC || !f.base->cls.is_semi_potent)
        return {na_row(d.name, "base is not a semi-potent UUSC ring")};
      Legs legs(d.name);
      legs.expect(f.whole->cls.is_UUSC, "RG UUSC", field_witness(*f.whole, "is_UUSC"));
      return {legs.finish()};
    }});
  }
}

void plan_thm43(Context& ctx, Plan& plan) {
  for (const auto& d : group_ring_instances(ctx)) {
    plan.tasks.push_back({d.name, [&ctx, d]() -> Rows {
      const auto f = group_ring_facts(ctx, d);
      if (!f.base->cls.is_potent) return {na_row(d.name, "base not potent")};
      Legs legs(d.name);
      for (const char* field : {"is_CUSC", "is_UUSC"}) {
        const bool expected = *f.base->cls.get(field) && f.two_group;
        legs.expect(*f.whole->cls.get(field) == expected,
                    short_name(field) + " iff R is and " + f.group + " is a 2-group (" +
                        yes_no(expected) + ")",
                    field_witness(*f.whole, field));
      }
      return {legs.finish()};
    }});
  }
}

// ---- cross-checks and exploration ---------------------------------------------

void plan_structure(Context& ctx, Plan& plan) {
  plan.notes.push_back("semi-potency from principal one-sided ideals against the full ideal lattice");
  plan.notes.push_back("local against the number of maximal left ideals");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (a.ring->order() > ctx.opts.semi_potent_limit)
      return {skipped_row(e.name, "order above the lattice cross-check limit")};
    const Ring& r = *a.ring;
    auto lattice_semi_potent = [&](const std::vector<ElementSet>& ideals) {
      return std::all_of(ideals.begin(), ideals.end(), [&](const ElementSet& l) {
        if (l.is_subset_of(a.inv.radical)) return true;
        auto with_id = l & a.inv.idempotents;
        with_id.erase(r.zero());
        return !with_id.empty();
      });
    };
    const bool sp = lattice_semi_potent(left_ideals(r, ctx.opts.classify.lattice)) &&
                    lattice_semi_potent(right_ideals(r, ctx.opts.classify.lattice));
    const auto maximal = maximal_left_ideals(r, ctx.opts.classify.lattice);
    Legs legs(e.name);
    legs.expect(sp == a.cls.is_semi_potent, "semi-potent agrees with the lattice (" + yes_no(sp) + ")",
                field_witness(a, "is_semi_potent"));
    legs.expect((maximal.size() == 1) == a.cls.is_local,
                "local iff one maximal left ideal (" + std::to_string(maximal.size()) + ")",
                field_witness(a, "is_local"));
    return {legs.finish()};
  });
}

void plan_jacobson(Context& ctx, Plan& plan) {
  plan.notes.push_back("J from quasi-regularity against the intersection of maximal one-sided ideals");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    if (a.ring->order() > ctx.opts.jacobson_limit)
      return {skipped_row(e.name, "order above the cross-check limit")};
    const Ring& r = *a.ring;
    auto intersect = [&](const std::vector<ElementSet>& ideals) {
      auto acc = ElementSet::full(r.order());
      for (const auto& m : ideals) acc &= m;
      return acc;
    };
    const auto left = intersect(maximal_left_ideals(r, ctx.opts.classify.lattice));
    const auto right = intersect(maximal_right_ideals(r, ctx.opts.classify.lattice));
    auto labels = [&](const ElementSet& s) {
      Json j = Json::array();
      s.for_each([&](Elem x) { j.push_back(r.label(x)); });
      return j;
    };
    Legs legs(e.name);
    legs.expect(left == a.inv.radical, "maximal left ideals",
                Json{{"quasi_regular", labels(a.inv.radical)}, {"lattice", labels(left)}});
    legs.expect(right == a.inv.radical, "maximal right ideals",
                Json{{"quasi_regular", labels(a.inv.radical)}, {"lattice", labels(right)}});
    legs.note("|J| = " + std::to_string(a.inv.radical.size()));
    return {legs.finish()};
  });
}

void plan_explore(Context& ctx, Plan& plan) {
  plan.notes.push_back("observation sweep: UUSC(R) against UUSC and CUSC of T_n(R); "
                       "a row fails only if UUSC(R) and UUSC(T_n(R)) disagree");
  per_ring(ctx, plan, [](Context& ctx, const CatalogEntry& e, const RingAnalysis& a) -> Rows {
    Rows rows;
    for (std::size_t n = 2; n <= ctx.opts.tn_max; ++n) {
      const auto spec = triangular(n, e.spec);
      const std::string name = e.name + " -> " + display_name(*spec);
      if (!bounded_pow(a.ring->order(), n * (n + 1) / 2, ctx.opts.explore_limit)) break;
      const auto t = ctx.analysis(spec);
      Legs legs(name);
      legs.expect(t->cls.is_UUSC == a.cls.is_UUSC,
                  "UUSC(R) = UUSC(T_n(R)) = " + yes_no(a.cls.is_UUSC),
                  Json::array({field_witness(a, "is_UUSC"), field_witness(*t, "is_UUSC")}));
      legs.note(std::string("T_n(R) ") + (t->cls.is_CUSC ? "CUSC" : "not CUSC") +
                (a.cls.is_commutative ? ", R commutative" : ", R not commutative"));
      rows.push_back(legs.finish());
    }
    return rows;
  });
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"diagram", "implication diagram between the clean-type classes", plan_diagram},
      {"ex1.4", "Z2[x] and T2(Z2) against the class boundaries", plan_ex14},
      {"ex2.3", "2-good identity criterion and triangular rings over commutative USC rings", plan_ex23},
      {"prop2.1", "five equivalent conditions on abelian rings", plan_prop21},
      {"prop2.2", "seven equivalent conditions around R/J = Z2", plan_prop22},
      {"prop2.4", "CUSC and UUSC pass to subrings", plan_prop24},
      {"prop2.5", "CUSC and UUSC of direct products", plan_prop25},
      {"cor2.6", "subdirect products of CUSC and UUSC rings", plan_cor26},
      {"cor2.7", "splitting along a central idempotent", plan_cor27},
      {"lemma2.8", "lifting CUSC and UUSC across ideals inside J", plan_lemma28},
      {"cor.skew", "UUSC of skew truncated polynomial rings", plan_cor_skew},
      {"cor2.14", "UUSC of truncated polynomial, trivial extension and triangular rings", plan_cor214},
      {"cor.morita", "UUSC of trivial Morita contexts", plan_cor_morita},
      {"prop.tav", "CUSC of trivial extensions T(A,V)", plan_prop_tav},
      {"prop2.18", "ideal extensions pass UUSC and CUSC down to R", plan_prop218},
      {"prop2.19", "ideal extensions inherit UUSC and CUSC under the stated hypotheses", plan_prop219},
      {"thm3.1", "six equivalent conditions on semi-potent rings", plan_thm31},
      {"cor.quasi-duo", "potent UUSC rings are quasi-duo", plan_cor_quasi_duo},
      {"cor3.2", "regular rings: UUSC iff Boolean", plan_cor32},
      {"prop3.3", "USC iff clean and CUSC", plan_prop33},
      {"thm3.4", "USC iff CUSC and potent", plan_thm34},
      {"cor3.5", "clean, potent, USC and strongly clean agree on CUSC rings", plan_cor35},
      {"cor3.6", "semi-boolean iff potent with UUSC quotient by J", plan_cor36},
      {"cor3.8", "R = ucn0(R) gives USC, and not conversely", plan_cor38},
      {"thm3.9", "2 lies in J for semi-potent UUSC rings", plan_thm39},
      {"thm3.10", "2-good obstructions in CUSC and UUSC rings", plan_thm310},
      {"thm3.11", "triangular rings over commutative rings", plan_thm311},
      {"lemma4.1", "group rings whose idempotents lie in R", plan_lemma41},
      {"prop4.4", "group rings of 2-groups over semi-potent UUSC rings", plan_prop44},
      {"thm4.3", "CUSC and UUSC group rings", plan_thm43},
      {"structure", "semi-potent and local cross-checked against ideal lattices", plan_structure},
      {"jacobson", "Jacobson radical cross-checked against maximal ideals", plan_jacobson},
      {"explore.uusc-tn", "UUSC of T_n(R) across the catalog", plan_explore},
  };
  return all;
}

}  // namespace ringlab::suite
