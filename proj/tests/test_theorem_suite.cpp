#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/theorem_suite.hpp"

using namespace ringlab;

namespace {

const Catalog& small_catalog() {
  static const Catalog c = build_catalog({{"Z2", zn(2)},
                                          {"Z3", zn(3)},
                                          {"Z4", zn(4)},
                                          {"Z6", zn(6)},
                                          {"T2(Z2)", triangular(2, zn(2))},
                                          {"M2(Z2)", matrix(2, zn(2))},
                                          {"Z2C2", group_ring(zn(2), cyclic_group(2))},
                                          {"T(Z2)", trivial_extension(zn(2))}});
  return c;
}

const TheoremReport& find(const SuiteReport& r, const std::string& id) {
  for (const auto& t : r.theorems)
    if (t.id == id) return t;
  FAIL("missing theorem " << id);
  throw;
}

}  // namespace

TEST_CASE("registry covers the checked statements") {
  for (const char* id : {"prop2.1", "prop2.2", "prop2.4", "prop2.5", "cor2.6", "cor2.7", "lemma2.8",
                         "cor2.14", "prop2.18", "prop2.19", "thm3.1", "cor3.2", "prop3.3", "thm3.4",
                         "cor3.5", "cor3.6", "cor3.8", "thm3.9", "thm3.10", "thm3.11", "lemma4.1",
                         "prop4.4", "thm4.3", "diagram"})
    CHECK_MESSAGE(is_known_theorem(id), id);
  CHECK_FALSE(is_known_theorem("nope"));
  CHECK(theorem_registry().front().id == "diagram");
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_suite(small_catalog(), {"thm3.4", "nope"}), Error);
}

TEST_CASE("full suite on a small catalog passes") {
  SuiteOptions opts;
  opts.jobs = 1;
  const auto report = run_suite(small_catalog(), {}, opts);
  CHECK(report.theorems.size() == theorem_registry().size());
  for (const auto& t : report.theorems) {
    CAPTURE(t.id);
    CHECK(t.aggregate != Verdict::Fail);
    for (const auto& row : t.rows) CHECK_MESSAGE(row.verdict != Verdict::Fail, row.ring << ": " << row.detail);
  }
  CHECK_FALSE(report.any_fail());

  const auto& t34 = find(report, "thm3.4");
  CHECK(t34.aggregate == Verdict::Pass);
  CHECK(t34.rows.back().ring == "Z2[x]");

  const auto& p21 = find(report, "prop2.1");
  for (const auto& row : p21.rows)
    if (row.ring == "T2(Z2)" || row.ring == "M2(Z2)") CHECK(row.verdict == Verdict::NotApplicable);
}

TEST_CASE("selection keeps registry order") {
  SuiteOptions opts;
  opts.jobs = 1;
  const auto report = run_suite(small_catalog(), {"thm3.4", "diagram"}, opts);
  REQUIRE(report.theorems.size() == 2);
  CHECK(report.theorems[0].id == "diagram");
  CHECK(report.theorems[1].id == "thm3.4");
}

TEST_CASE("reports do not depend on the worker count") {
  const std::vector<std::string> ids = {"diagram", "prop2.4", "cor2.7", "thm3.10", "thm3.11", "explore.uusc-tn"};
  SuiteOptions serial;
  serial.jobs = 1;
  SuiteOptions parallel;
  parallel.jobs = 4;
  const auto a = to_json(run_suite(small_catalog(), ids, serial)).dump();
  const auto b = to_json(run_suite(small_catalog(), ids, parallel)).dump();
  CHECK(a == b);
}

TEST_CASE("size bounds turn rows into skips, not failures") {
  SuiteOptions opts;
  opts.jobs = 1;
  opts.derived_limit = 16;
  opts.scan_limit = 4;
  const auto report = run_suite(small_catalog(), {"thm3.11", "prop2.4"}, opts);
  bool any_skip = false;
  for (const auto& t : report.theorems)
    for (const auto& row : t.rows) {
      CHECK(row.verdict != Verdict::Fail);
      any_skip |= row.verdict == Verdict::Skipped;
    }
  CHECK(any_skip);
}

TEST_CASE("JSON and table output") {
  SuiteOptions opts;
  opts.jobs = 1;
  const auto report = run_suite(small_catalog(), {"cor3.8", "thm3.9"}, opts);
  const auto j = to_json(report);
  CHECK(j["all_pass"] == true);
  CHECK(j["theorems"].size() == 2);
  CHECK(j["theorems"][0]["id"] == "cor3.8");
  const auto& s = j["summary"];
  CHECK(s["pass"].get<int>() + s["fail"].get<int>() + s["not-applicable"].get<int>() +
            s["skipped"].get<int>() == 2);
  const auto table = to_table(report);
  CHECK(table.rfind("theorem", 0) == 0);
  CHECK(table.find("T2(Z2) converse") != std::string::npos);
}

TEST_CASE("analysis cache memoizes by canonical spec") {
  AnalysisCache cache({}, {});
  const auto a = cache.get(triangular(2, zn(2)));
  const auto b = cache.get(triangular(2, zn(2)));
  CHECK(a.get() == b.get());
  const auto q = cache.radical_quotient(*a);
  CHECK(q->ring->order() == 4);
  CHECK(cache.radical_quotient(*a).get() == q.get());
}
