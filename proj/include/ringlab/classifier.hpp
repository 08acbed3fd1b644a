#pragma once

#include "ringlab/constructors.hpp"
#include "ringlab/element_analysis.hpp"
#include "ringlab/invariants.hpp"
#include "ringlab/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

/// Predicates bounded by the ideal lattice can come back unanswered.
enum class TriState { False, True, Skipped };

struct Classification {
  bool is_clean = false;
  bool is_strongly_clean = false;
  bool is_UC = false;
  bool is_USC = false;
  bool is_CUC = false;
  bool is_CUSC = false;
  bool is_UUC = false;
  bool is_UUSC = false;
  bool is_boolean = false;
  bool is_reduced = false;
  bool is_abelian = false;
  bool is_commutative = false;
  bool is_local = false;
  bool is_regular = false;
  bool is_semi_potent = false;
  bool is_potent = false;
  bool is_semi_boolean = false;
  TriState is_quasi_duo_left = TriState::Skipped;
  TriState is_quasi_duo_right = TriState::Skipped;
  bool one_is_two_good = false;
  bool two_in_J = false;
  bool R_equals_ucn0 = false;
  bool RmodJ_boolean = false;
  bool U_equals_one_plus_J = false;

  /// Field name -> labels of a counterexample (the offending element first,
  /// then the idempotent/unit pairs of its decompositions where relevant).
  std::map<std::string, std::vector<std::string>> witnesses;

  /// Boolean fields in serialization order.
  static const std::vector<std::pair<const char*, bool Classification::*>>& boolean_fields();
  /// Looks up a boolean field by its JSON name.
  std::optional<bool> get(const std::string& field) const;
};

struct ClassifyOptions {
  UscReading usc_reading = UscReading::ExactlyOne;
  /// Applied to R/J when deciding the quasi-duo predicates.
  LatticeOptions lattice;
};

/// Everything classify needs, computed once per ring.
struct RingAnalysis {
  RingHandle ring;
  InvariantCache inv;
  QuotientResult radical_quotient;
  InvariantCache quotient_inv;
  Classification cls;

  static RingAnalysis analyze(const RingHandle& ring, const ClassifyOptions& opts = {});
};

Classification classify(const RingHandle& ring, const ClassifyOptions& opts = {});

std::vector<ElementProfile> classify_element_summary(const Ring& r, const InvariantCache& inv,
                                                     UscReading reading = UscReading::ExactlyOne);

Json to_json(const Classification& c);

/// Searches for a ring isomorphism r1 -> r2 (element map). Throws
/// SizeExceeded when the common order exceeds `limit`.
std::optional<std::vector<Elem>> check_isomorphic(const Ring& r1, const Ring& r2,
                                                  std::size_t limit = 4096);

/// True when `map` is a bijective unital ring homomorphism r1 -> r2.
bool is_ring_isomorphism(const Ring& r1, const Ring& r2, const std::vector<Elem>& map);

}  // namespace ringlab
