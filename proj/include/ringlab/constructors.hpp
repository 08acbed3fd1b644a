#pragma once

#include "ringlab/element_set.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ring_spec.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

/// Builds the ring described by `spec`. Element references that do not
/// resolve raise SpecError at the offending node; constructor preconditions
/// raise ConstructionError, oversize results SizeExceeded.
RingHandle build(const SpecPtr& spec, const BuildOptions& opts = {});

RingHandle zn_ring(std::size_t n, const BuildOptions& opts = {});
/// GF(p^k) modulo the least monic irreducible of degree k (coefficient
/// vectors ordered as base-p integers). Elements print as polynomials in a.
RingHandle gf_ring(std::size_t p, std::size_t k, const BuildOptions& opts = {});
RingHandle product_ring(const std::vector<RingHandle>& factors, const BuildOptions& opts = {});
RingHandle matrix_ring(std::size_t n, const RingHandle& base, const BuildOptions& opts = {});
/// Upper triangular n×n matrices; the free entries are stored row-major.
RingHandle triangular_ring(std::size_t n, const RingHandle& base, const BuildOptions& opts = {});

struct QuotientResult {
  RingHandle ring;
  /// base element -> coset id
  std::vector<Elem> projection;
  /// The two-sided ideal that was factored out.
  ElementSet ideal;
};
/// R / <generators>; cosets are numbered by increasing least representative.
QuotientResult quotient_ring(const RingHandle& base, const ElementSet& generators,
                             const BuildOptions& opts = {});
QuotientResult radical_quotient_ring(const RingHandle& base, const BuildOptions& opts = {});
/// Same, with J(base) supplied by the caller.
QuotientResult radical_quotient_ring(const RingHandle& base, const ElementSet& radical,
                                     const BuildOptions& opts = {});

struct SubringResult {
  RingHandle ring;
  /// sub element -> base element
  std::vector<Elem> embedding;
};
/// eRe with identity e. Throws ConstructionError if e is not idempotent.
SubringResult corner_ring(const RingHandle& base, Elem e, const BuildOptions& opts = {});
/// Least unital subring containing `generators`.
SubringResult subring(const RingHandle& base, const ElementSet& generators,
                      const BuildOptions& opts = {});

struct GroupRingResult {
  RingHandle ring;
  FiniteGroup group;
  /// ε: RG -> R as an element map.
  std::vector<Elem> augmentation;
  /// Δ(RG), the ideal generated by {1 - g}.
  ElementSet augmentation_ideal;
  /// r -> r·1_G
  std::vector<Elem> coefficient_embedding;
  /// g -> 1·g
  std::vector<Elem> group_embedding;
};
/// Element ids encode coefficient functions: id = sum c_g·|R|^g over the
/// group element ids g.
GroupRingResult group_ring_of(const RingHandle& base, const GroupSpec& group,
                              const BuildOptions& opts = {});

/// Problems found while validating module data; empty means valid.
struct ModuleCheck {
  bool ok = true;
  std::string message;
};

/// Checks that `m` is an (A,B)-bimodule: abelian additive group, unital
/// biadditive actions, (aa')m = a(a'm), m(bb') = (mb)b', (am)b = a(mb).
ModuleCheck validate_bimodule(const Ring& a, const Ring& b, const ModuleTables& m);
/// Bimodule checks plus, for the product on M: associativity,
/// distributivity and (rm)n = r(mn), (mr)n = m(rn), (mn)r = m(nr).
ModuleCheck validate_ideal_module(const Ring& r, const ModuleTables& m);

ModuleTables regular_bimodule(const Ring& r);
ModuleTables zero_module(std::size_t left_order, std::size_t right_order);
/// Z_k with A and B acting through their characteristic maps n·1 -> n mod k.
/// Throws ConstructionError when the actions are not well defined.
ModuleTables integer_bimodule(std::size_t k, const Ring& a, const Ring& b);
/// A two-sided ideal of `host` viewed as a nonunital ring with the actions
/// of `acting` through the ring map `lift` (acting element -> host element).
ModuleTables ideal_module(const Ring& host, const ElementSet& ideal, const Ring& acting,
                          const std::vector<Elem>& lift);

/// Hypotheses of the ideal-extension results, evaluated on data.
struct IdealExtensionHypotheses {
  /// e·m = m·e for every idempotent e of R and every m in M.
  bool idempotents_commute = true;
  /// every m has some n with m + n + mn = 0.
  bool quasi_regular = true;
  std::string detail;
};
IdealExtensionHypotheses ideal_extension_hypotheses(const Ring& r, const ModuleTables& m);

/// e·x = x·e for every idempotent e of A and x in V.
bool idempotents_commute_with(const Ring& a, const ModuleTables& v);

/// T(A, V); V defaults to A as an (A,A)-bimodule.
RingHandle trivial_extension_ring(const RingHandle& base,
                                  const std::optional<ModuleTables>& v = std::nullopt,
                                  const BuildOptions& opts = {});
/// I(R, M) = R ⊕ M with (r,m)(s,n) = (rs, rn + ms + mn).
RingHandle ideal_extension_ring(const RingHandle& base, const ModuleTables& m,
                                const BuildOptions& opts = {});
/// Triples (a, m, b) multiplied as 2×2 upper triangular matrices.
RingHandle formal_triangular_ring(const RingHandle& a, const RingHandle& b,
                                  const ModuleTables& m, const BuildOptions& opts = {});
/// Morita context (A M; N B) with zero context products, realized as
/// T(A×B, M⊕N).
RingHandle trivial_morita_ring(const RingHandle& a, const RingHandle& b,
                               const ModuleTables& m, const ModuleTables& n,
                               const BuildOptions& opts = {});
/// R[x]/(x^n). Element ids encode coefficient tuples: id = sum c_i·|R|^i.
RingHandle trunc_poly_ring(const RingHandle& base, std::size_t n, const BuildOptions& opts = {});
/// R[x; α]/(x^n) with x·r = α(r)·x. Throws ConstructionError when α is not a
/// unital ring endomorphism.
RingHandle skew_trunc_poly_ring(const RingHandle& base, const Endomorphism& alpha,
                                std::size_t n, const BuildOptions& opts = {});
RingHandle opposite_ring(const RingHandle& base, const BuildOptions& opts = {});

/// Element map of an endomorphism descriptor on `base`, validated.
std::vector<Elem> endomorphism_map(const Ring& base, const Endomorphism& alpha);

}  // namespace ringlab
