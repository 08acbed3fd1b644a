// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/classifier.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/element_analysis.hpp"
#include "ringlab/error.hpp"
#include "ringlab/poly_analyzer.hpp"
#include "ringlab/theorem_suite.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  (" << detail
            << ")\n";
  for (const auto& p : o.problems) std::cout << "    - " << p << '\n';
  failures += !o.ok;
}

Elem at(const Ring& r, std::string_view label) {
  const auto e = r.find_label(label);
  if (!e) throw Error("no element " + std::string(label));
  return *e;
}

const Catalog& catalog() {
  static const Catalog c = default_catalog();
  return c;
}

void criterion1() {
  Outcome o;
  double worst = 0;
  auto timed = [&](const std::string& name, auto fn) {
    const auto t0 = Clock::now();
    fn();
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    o.require(s < 1.0, name + " took " + std::to_string(s) + " s");
  };
  timed("classify T2(Z2)", [&] {
    const auto c = classify(build(triangular(2, zn(2))));
    o.require(c.is_USC, "T2(Z2) USC");
    o.require(c.is_CUSC, "T2(Z2) CUSC");
    o.require(c.is_UUC, "T2(Z2) UUC");
    o.require(!c.is_CUC, "T2(Z2) not CUC");
    o.require(!c.is_UC, "T2(Z2) not UC");
    o.require(!c.is_abelian, "T2(Z2) not abelian");
  });
  timed("Z2[x]", [&] {
    const PolyRingView v(zn_ring(2));
    o.require(poly_is_cusc(v).holds, "Z2[x] CUSC");
    o.require(!poly_is_clean(v).holds, "Z2[x] not clean");
  });
  timed("ucn0(T2(Z2))", [&] {
    const auto r = build(triangular(2, zn(2)));
    const auto inv = InvariantCache::compute(*r);
    o.require(!inv.ucn0.contains(at(*r, "(1 1;0 0)")), "(1 1;0 0) outside ucn0");
    o.require(classify(r).is_USC, "T2(Z2) USC");
  });
  std::ostringstream d;
  d << "slowest example " << worst << " s";
  report(1, "example reproduction", o, d.str());
}

std::string verify_json(const std::vector<std::string>& extra, int& code, double& secs) {
  std::vector<std::string> args = {"verify", "--json"};
  args.insert(args.end(), extra.begin(), extra.end());
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  code = run_cli(args, out, err);
  secs = seconds_since(t0);
  return out.str();
}

std::string first_run;

void criterion2() {
  Outcome o;
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& e : catalog().entries) {
    lo = std::min(lo, e.ring->order());
    hi = std::max(hi, e.ring->order());
  }
  o.require(catalog().entries.size() >= 25, "catalog has fewer than 25 rings");
  o.require(lo == 2 && hi == 4096, "catalog orders span " + std::to_string(lo) + ".." + std::to_string(hi));

  int code = -1;
  double secs = 0;
  first_run = verify_json({}, code, secs);
  o.require(code == 0, "verify exit code " + std::to_string(code));
  o.require(secs <= 300, "verify took " + std::to_string(secs) + " s");
  std::size_t theorems = 0;
  try {
    const auto j = Json::parse(first_run);
    for (const auto& t : j["theorems"]) {
      ++theorems;
      o.require(t["aggregate"] == "pass", t["id"].get<std::string>() + " is " + t["aggregate"].get<std::string>());
    }
    for (const auto& info : theorem_registry()) {
      bool present = false;
      for (const auto& t : j["theorems"]) present |= t["id"] == info.id;
      o.require(present, "missing " + info.id);
    }
  } catch (const std::exception& e) {
    o.require(false, std::string("bad JSON: ") + e.what());
  }
  std::ostringstream d;
  d << catalog().entries.size() << " rings, orders " << lo << ".." << hi << ", " << theorems
    << " checks, " << secs << " s";
  report(2, "theorem suite green", o, d.str());
}

void criterion3() {
  Outcome o;
  std::size_t rings = 0, elements = 0;
  for (const auto& e : catalog().entries) {
    const Ring& r = *e.ring;
    if (r.order() > 64) continue;
    ++rings;
    const auto inv = InvariantCache::compute(r);
    const auto id = oracle::idempotents(r);
    const auto u = oracle::units(r);
    for (Elem a : r.elements()) {
      ++elements;
      const auto naive = oracle::decompositions(r, id, u, a);
      std::vector<oracle::Decomp> mine, mine_sc, naive_sc;
      for (const auto& d : clean_decompositions(r, inv, a)) mine.emplace_back(d.idempotent, d.unit, d.commuting);
      for (const auto& d : strongly_clean_decompositions(r, inv, a))
        mine_sc.emplace_back(d.idempotent, d.unit, d.commuting);
      for (const auto& d : naive)
        if (std::get<2>(d)) naive_sc.push_back(d);
      o.require(mine == naive, e.name + ": clean decompositions of " + r.label(a));
      o.require(mine_sc == naive_sc, e.name + ": strongly clean decompositions of " + r.label(a));
    }
    const auto j = inv.radical.members();
    const auto oracle_j = oracle::jacobson_from_maximal(r);
    o.require(std::vector<Elem>(oracle_j.begin(), oracle_j.end()) == j, e.name + ": J(R)");
  }
  report(3, "oracle equivalence", o,
         std::to_string(rings) + " rings, " + std::to_string(elements) + " elements");
}

void criterion4() {
  Outcome o;
  const std::pair<const char*, const char*> arrows[] = {
      {"is_UC", "is_USC"},   {"is_UC", "is_CUC"},    {"is_USC", "is_CUSC"},
      {"is_CUC", "is_CUSC"}, {"is_CUC", "is_UUC"},   {"is_UUC", "is_UUSC"},
      {"is_CUSC", "is_UUSC"}, {"is_USC", "is_strongly_clean"}, {"is_strongly_clean", "is_clean"}};
  for (const auto& e : catalog().entries) {
    const auto c = classify(e.ring);
    for (const auto& [from, to] : arrows)
      o.require(!*c.get(from) || *c.get(to), e.name + ": " + from + " => " + to);
  }

  std::vector<RingHandle> seeds = {zn_ring(4), zn_ring(6), gf_ring(2, 2), build(product({zn(2), zn(2)})),
                                   build(triangular(2, zn(2))), build(trunc_poly(zn(2), 2)), zn_ring(5)};
  std::mt19937 rng(7);
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    const Ring& base = *seeds[i % seeds.size()];
    const std::size_t n = base.order();
    Table add(n, std::vector<Elem>(n)), mul = add;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        add[a][b] = base.add(a, b);
        mul[a][b] = base.mul(a, b);
      }
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    auto& t = (i % 2) ? mul : add;
    const Elem a = pick(rng), b = pick(rng);
    Elem v = pick(rng);
    while (v == t[a][b]) v = pick(rng);
    t[a][b] = v;
    bool accepted = true;
    try {
      table_ring(add, mul);
    } catch (const ConstructionError&) {
      accepted = false;
    }
    o.require(!(accepted && !oracle::is_ring(add, mul)), "mutation " + std::to_string(i) + " falsely accepted");
    rejected += !accepted;
  }
  report(4, "implication diagram and validator", o,
         std::to_string(catalog().entries.size()) + " rings x 9 arrows, " + std::to_string(rejected) +
             "/1000 mutations rejected");
}

void criterion5() {
  Outcome o;
  o.require(idempotents(*zn_ring(6)).members() == std::vector<Elem>{0, 1, 3, 4}, "Id(Z6)");
  o.require(units(*zn_ring(4)).members.members() == std::vector<Elem>{1, 3}, "U(Z4)");
  const auto t2 = build(triangular(2, zn(2)));
  ElementSet strict(t2->order());
  for (Elem x : t2->elements())
    if (t2->label(x).starts_with("(0 ") && t2->label(x).ends_with(";0 0)")) strict.insert(x);
  o.require(strict.size() == 2 && jacobson_radical(*t2) == strict, "J(T2(Z2))");
  const auto m2 = build(matrix(2, zn(2)));
  const auto u = units(*m2).members;
  const Elem a = at(*m2, "(1 1;1 0)"), b = at(*m2, "(0 1;1 1)");
  o.require(u.contains(a) && u.contains(b) && m2->add(a, b) == m2->one(), "1 = (1 1;1 0) + (0 1;1 1) in M2(Z2)");
  report(5, "known-value spot checks", o, "Id(Z6), U(Z4), J(T2(Z2)), 2-good identity of M2(Z2)");
}

void criterion6() {
  Outcome o;
  int code = -1;
  double secs = 0;
  const auto second = verify_json({"--jobs", "1"}, code, secs);
  o.require(code == 0, "second run exit code " + std::to_string(code));
  o.require(!first_run.empty() && second == first_run, "verify --json output differs between runs");
  report(6, "determinism", o,
         "default workers vs --jobs 1, " + std::to_string(second.size()) + " bytes each");
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << '\n';
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
