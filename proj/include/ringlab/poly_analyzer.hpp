#pragma once

#include "ringlab/invariants.hpp"
#include "ringlab/ring.hpp"

#include <string>
#include <vector>

namespace ringlab {

/// The infinite ring R[x] over a finite commutative R, described through
/// U(R[x]) = {f : f0 ∈ U(R), f_i ∈ Nil(R) for i ≥ 1} and Id(R[x]) = Id(R).
class PolyRingView {
 public:
  /// Throws Error when `base` is not commutative.
  explicit PolyRingView(RingHandle base);

  const Ring& base() const { return *base_; }
  const RingHandle& base_handle() const { return base_; }
  const InvariantCache& invariants() const { return inv_; }

 private:
  RingHandle base_;
  InvariantCache inv_;
};

/// f is clean iff f0 lies in `constant_terms` and every higher coefficient
/// lies in `higher_coefficients`.
struct PolyCleanSet {
  /// Id(R) + U(R)
  ElementSet constant_terms;
  /// (e, {e + u : u ∈ U(R)}) per idempotent e, in increasing order of e.
  std::vector<std::pair<Elem, ElementSet>> constants_by_idempotent;
  /// Nil(R)
  ElementSet higher_coefficients;
};

PolyCleanSet poly_clean_set(const PolyRingView& view);

struct PolyVerdict {
  bool holds = false;
  /// On failure: the constant polynomial and the idempotents of its
  /// competing decompositions (labels).
  std::vector<std::string> witness;
};

/// Every clean f has exactly one decomposition; decompositions of f match
/// those of its constant term in R.
PolyVerdict poly_is_cusc(const PolyRingView& view);
/// Every polynomial is clean; with a nonzero base the non-nilpotent
/// coefficient 1 at x already fails.
PolyVerdict poly_is_clean(const PolyRingView& view);

struct PolyValidation {
  bool ok = true;
  /// Highest degree of the sampled polynomials.
  std::size_t degree = 0;
  std::string detail;
};

/// Checks the unit and idempotent characterizations on all polynomials of
/// degree ≤ `max_degree` (lowered until |R|^(degree+1) ≤ `sample_limit`):
/// series inverses verified by exact multiplication, brute-force idempotents
/// of R[x], unit sets of R[x]/(x^(d+1)) and constant decompositions there.
PolyValidation validate_poly_view(const PolyRingView& view, std::size_t max_degree = 3,
                                  std::size_t sample_limit = 1024);

}  // namespace ringlab
