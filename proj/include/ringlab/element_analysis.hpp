#pragma once

#include "ringlab/invariants.hpp"
#include "ringlab/ring.hpp"

#include <vector>

namespace ringlab {

/// a = idempotent + unit.
struct Decomposition {
  Elem idempotent = kNoElem;
  Elem unit = kNoElem;
  bool commuting = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// How "uniquely strongly clean" is read for a single element: exactly one
/// commuting decomposition, or at most one.
enum class UscReading { ExactlyOne, AtMostOne };

/// One entry per idempotent e with a - e a unit, in increasing order of e.
std::vector<Decomposition> clean_decompositions(const Ring& r, const InvariantCache& inv, Elem a);
std::vector<Decomposition> strongly_clean_decompositions(const Ring& r, const InvariantCache& inv,
                                                         Elem a);

struct ElementProfile {
  Elem element = kNoElem;
  std::vector<Decomposition> clean;
  std::vector<Decomposition> strongly_clean;
  bool is_clean = false;
  bool is_strongly_clean = false;
  bool is_uniquely_clean = false;
  bool is_usc = false;
};

ElementProfile profile_element(const Ring& r, const InvariantCache& inv, Elem a,
                               UscReading reading = UscReading::ExactlyOne);

/// Verdict plus the decompositions that justify it. On failure the list is
/// empty (no decomposition) or holds the competing decompositions.
struct ElementVerdict {
  bool holds = false;
  std::vector<Decomposition> witnesses;
};

ElementVerdict is_usc_element(const Ring& r, const InvariantCache& inv, Elem a,
                              UscReading reading = UscReading::ExactlyOne);
ElementVerdict is_uniquely_clean_element(const Ring& r, const InvariantCache& inv, Elem a);

Json to_json(const Ring& r, const Decomposition& d);
Json to_json(const Ring& r, const ElementProfile& p);

}  // namespace ringlab
