#pragma once

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ringlab {

ElementSet idempotents(const Ring& r);

struct UnitGroup {
  ElementSet members;
  /// inverse[u] for units, kNoElem elsewhere.
  std::vector<Elem> inverse;
};
UnitGroup units(const Ring& r);

/// {a : a^k = 0 for some k <= order}.
ElementSet nilpotents(const Ring& r);

/// J(R) = {a : 1 - r·a is a unit for every r}.
ElementSet jacobson_radical(const Ring& r, const ElementSet& unit_set);
ElementSet jacobson_radical(const Ring& r);

ElementSet center(const Ring& r);

/// U(R) + U(R).
ElementSet two_good_elements(const Ring& r, const ElementSet& unit_set);

/// {e + j : e a central idempotent, j in J(R)}.
ElementSet ucn0(const Ring& r, const ElementSet& idem, const ElementSet& cent,
                const ElementSet& radical);

/// Per-ring memo of the canonical element sets. Built eagerly, so a cache is
/// immutable once returned and safe to share between threads.
struct InvariantCache {
  ElementSet idempotents;
  ElementSet units;
  std::vector<Elem> inverse;
  ElementSet nilpotents;
  ElementSet radical;
  ElementSet center;
  ElementSet two_good;
  ElementSet ucn0;

  static InvariantCache compute(const Ring& r);
};

// ---- ideals ---------------------------------------------------------------

/// Least two-sided ideal containing `generators` (worklist closure).
ElementSet ideal_generated(const Ring& r, const ElementSet& generators);

bool is_additive_subgroup(const Ring& r, const ElementSet& s);
bool is_left_ideal(const Ring& r, const ElementSet& s);
bool is_right_ideal(const Ring& r, const ElementSet& s);
bool is_two_sided_ideal(const Ring& r, const ElementSet& s);

struct LiftingResult {
  bool lifts = true;
  /// (x, e) with x² - x in I, e idempotent, e - x in I.
  std::vector<std::pair<Elem, Elem>> witnesses;
  /// First x with x² - x in I that has no idempotent lift.
  Elem failure = kNoElem;
};

/// Do idempotents lift modulo the two-sided ideal `ideal`? Throws
/// ConstructionError when `ideal` is not a two-sided ideal.
LiftingResult idempotents_lift_mod(const Ring& r, const ElementSet& idem,
                                   const ElementSet& ideal);

struct LatticeOptions {
  std::size_t order_limit = 256;
  std::size_t count_limit = 100000;
};

/// All left ideals, sorted by (size, members). Built as sums of cyclic left
/// ideals R·a. Throws SizeExceeded past `order_limit` and
/// LatticeLimitExceeded past `count_limit`.
std::vector<ElementSet> left_ideals(const Ring& r, const LatticeOptions& opts = {});
std::vector<ElementSet> right_ideals(const Ring& r, const LatticeOptions& opts = {});

/// Proper left ideals M with M + R·a = R for every a outside M.
std::vector<ElementSet> maximal_left_ideals(const Ring& r, const LatticeOptions& opts = {});
std::vector<ElementSet> maximal_right_ideals(const Ring& r, const LatticeOptions& opts = {});

/// R·a and a·R.
ElementSet left_principal(const Ring& r, Elem a);
ElementSet right_principal(const Ring& r, Elem a);

}  // namespace ringlab
