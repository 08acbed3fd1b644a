#pragma once

#include "ringlab/catalog.hpp"
#include "ringlab/classifier.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <future>
#include <string>
#include <vector>

namespace ringlab {

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

std::string to_string(Verdict v);

struct RingVerdict {
  std::string ring;
  Verdict verdict = Verdict::NotApplicable;
  /// Which legs or directions were exercised, or why nothing was asserted.
  std::string detail;
  /// On failure: element labels and decompositions that refute the claim.
  Json witness;
};

struct TheoremReport {
  std::string id;
  std::string title;
  std::vector<RingVerdict> rows;
  /// Fail if any row fails; Pass if at least one row passes; otherwise
  /// Skipped when some row was skipped, else NotApplicable.
  Verdict aggregate = Verdict::NotApplicable;
  std::vector<std::string> notes;
};

struct SuiteReport {
  std::vector<TheoremReport> theorems;

  bool any_fail() const;
};

struct SuiteOptions {
  /// 0 picks the hardware concurrency.
  unsigned jobs = 0;
  ClassifyOptions classify;
  BuildOptions build;
  /// Largest derived ring (T_n(R), products, extensions) the suite builds.
  std::size_t derived_limit = 4096;
  /// Largest n for the triangular sweeps.
  std::size_t tn_max = 3;
  /// Rings up to this order get corner and quotient scans.
  std::size_t scan_limit = 256;
  /// Single-element subrings are scanned up to this order.
  std::size_t subring_limit = 64;
  /// Corners compared against M_2(S) up to this order.
  std::size_t matrix_corner_limit = 64;
  /// Maximal-ideal cross-check of J(R) up to this order.
  std::size_t jacobson_limit = 64;
  /// Lattice cross-check of semi-potency up to this order.
  std::size_t semi_potent_limit = 32;
  /// Ideals per ring examined by the quotient scans.
  std::size_t ideal_scan_cap = 32;
  /// Largest T_n(R) in the exploratory sweep.
  std::size_t explore_limit = 512;
};

struct TheoremInfo {
  std::string id;
  std::string title;
};

/// Every check in run order.
const std::vector<TheoremInfo>& theorem_registry();
bool is_known_theorem(const std::string& id);

/// Thread-safe memo of ring analyses keyed by canonical spec. Concurrent
/// requests for the same key wait for the first computation.
class AnalysisCache {
 public:
  explicit AnalysisCache(ClassifyOptions opts, BuildOptions build)
      : opts_(opts), build_(build) {}

  std::shared_ptr<const RingAnalysis> get(const RingHandle& ring);
  std::shared_ptr<const RingAnalysis> get(const SpecPtr& spec);
  /// Analysis of R/J, reusing the quotient computed alongside R.
  std::shared_ptr<const RingAnalysis> radical_quotient(const RingAnalysis& a);

  const BuildOptions& build_options() const { return build_; }

 private:
  using Slot = std::shared_future<std::shared_ptr<const RingAnalysis>>;
  std::shared_ptr<const RingAnalysis> get_or_compute(
      const std::string& key, const std::function<RingHandle()>& make);

  ClassifyOptions opts_;
  BuildOptions build_;
  std::mutex mu_;
  std::map<std::string, Slot> slots_;
};

/// Runs the selected checks (all when `ids` is empty) over the catalog.
/// Throws Error on an unknown id. The report does not depend on `jobs`.
SuiteReport run_suite(const Catalog& catalog, const std::vector<std::string>& ids,
                      const SuiteOptions& opts = {});

Json to_json(const SuiteReport& report);
/// Columns: theorem, ring, verdict, detail; one line per row, then one
/// summary line per theorem.
std::string to_table(const SuiteReport& report);

}  // namespace ringlab
