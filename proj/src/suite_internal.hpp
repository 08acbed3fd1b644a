#pragma once

#include "ringlab/theorem_suite.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ringlab::suite {

/// One unit of parallel work; it may emit several rows or none.
struct Task {
  std::string ring;
  std::function<std::vector<RingVerdict>()> run;
};

struct Plan {
  std::vector<Task> tasks;
  std::vector<std::string> notes;
};

class Context {
 public:
  Context(const Catalog& catalog, const SuiteOptions& opts)
      : catalog(catalog), opts(opts), cache(opts.classify, opts.build) {}

  std::shared_ptr<const RingAnalysis> analysis(const RingHandle& r) { return cache.get(r); }
  std::shared_ptr<const RingAnalysis> analysis(const SpecPtr& s) { return cache.get(s); }
  std::shared_ptr<const RingAnalysis> quotient_by_radical(const RingAnalysis& a) {
    return cache.radical_quotient(a);
  }

  const Catalog& catalog;
  const SuiteOptions& opts;
  AnalysisCache cache;
};

using Planner = void (*)(Context&, Plan&);

struct Check {
  const char* id;
  const char* title;
  Planner plan;
};

/// All checks in report order.
const std::vector<Check>& checks();

/// Collects the legs of one row. A row with no exercised leg is
/// not-applicable; the first failed leg makes it fail.
class Legs {
 public:
  explicit Legs(std::string ring) : ring_(std::move(ring)) {}

  /// Records an asserted leg.
  void expect(bool holds, const std::string& leg, Json witness = nullptr);
  /// Records a leg whose hypothesis did not hold.
  void gated(const std::string& leg, const std::string& why);
  void note(const std::string& text) { notes_.push_back(text); }

  RingVerdict finish() const;

 private:
  std::string ring_;
  std::vector<std::string> exercised_;
  std::vector<std::string> gated_;
  std::vector<std::string> notes_;
  std::optional<std::string> failed_;
  Json witness_;
};

RingVerdict skipped_row(std::string ring, std::string why);
RingVerdict na_row(std::string ring, std::string why);

std::string yes_no(bool b);

}  // namespace ringlab::suite
