#pragma once

#include "ringlab/element_set.hpp"
#include "ringlab/ring_spec.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ringlab {

class Ring;
/// Rings are immutable after construction and shared by handle.
using RingHandle = std::shared_ptr<const Ring>;

struct BuildOptions {
  /// Rings up to this order get full add/mul tables; larger ones compute
  /// rows on demand and memoize them.
  std::size_t materialize_threshold = 4096;
  /// Hard cap on constructed ring orders.
  std::size_t max_order = std::size_t{1} << 20;
  /// Full cubic axiom check up to this order, seeded spot checks above.
  std::size_t validation_limit = 512;
  bool validate = true;
};

/// Outcome of an axiom scan. On failure `axiom` names the first violated law
/// and `witness` holds the offending elements (unused slots are kNoElem).
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  std::array<Elem, 3> witness{kNoElem, kNoElem, kNoElem};

  std::string describe() const;
};

namespace detail {

// Row-memoized binary operation for rings above the materialization
// threshold. Thread-safe: each row is filled exactly once.
class LazyTable {
 public:
  LazyTable(std::size_t n, std::function<Elem(Elem, Elem)> fn);
  Elem at(Elem a, Elem b) const {
    std::call_once(flags_[a], [&] { fill(a); });
    return rows_[a][b];
  }

 private:
  void fill(Elem a) const;
  std::size_t n_;
  std::function<Elem(Elem, Elem)> fn_;
  std::unique_ptr<std::once_flag[]> flags_;
  mutable std::unique_ptr<std::unique_ptr<Elem[]>[]> rows_;
};

}  // namespace detail

/// A finite associative unital ring on the dense element set 0..order-1.
class Ring {
 public:
  /// Everything a constructor supplies. `neg` may be empty, in which case it
  /// is derived from `add`.
  struct Definition {
    std::size_t order = 0;
    Elem zero = 0;
    Elem one = 0;
    std::function<Elem(Elem, Elem)> add;
    std::function<Elem(Elem, Elem)> mul;
    std::function<Elem(Elem)> neg;
    std::function<std::string(Elem)> label;
    SpecPtr spec;
  };

  /// Materializes (or wraps) the operations and, if `opts.validate`, checks
  /// the ring axioms. Throws ConstructionError on a violation.
  static RingHandle create(Definition def, const BuildOptions& opts = {});

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const {
    return add_tab_.empty() ? lazy_add_->at(a, b) : add_tab_[std::size_t{a} * n_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_tab_.empty() ? lazy_mul_->at(a, b) : mul_tab_[std::size_t{a} * n_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  /// a·a·...·a (k times); pow(a, 0) = one.
  Elem pow(Elem a, std::size_t k) const;
  /// k·1 for an integer k >= 0.
  Elem integer(std::size_t k) const;

  auto elements() const { return std::views::iota(Elem{0}, static_cast<Elem>(n_)); }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Resolves a display label; whitespace-insensitive when unambiguous.
  std::optional<Elem> find_label(std::string_view text) const;
  /// Accepts an id or a label.
  std::optional<Elem> resolve(const ElementRef& ref) const;

  const RingSpec& spec() const { return *spec_; }
  const SpecPtr& spec_ptr() const noexcept { return spec_; }
  bool materialized() const noexcept { return !mul_tab_.empty() || n_ == 0; }

 private:
  Ring() = default;

  std::size_t n_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> mul_tab_;
  std::unique_ptr<detail::LazyTable> lazy_add_;
  std::unique_ptr<detail::LazyTable> lazy_mul_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> label_index_;
  std::unordered_map<std::string, Elem> compact_index_;
  SpecPtr spec_;
};

/// Exhaustive check of the ring axioms. Throws SizeExceeded when
/// ring.order() > limit unless `force` is set (the check is cubic).
ValidationReport validate_axioms(const Ring& ring, std::size_t limit = 512,
                                 bool force = false);

/// Full check up to `limit`, seeded random triples above it.
ValidationReport validate_ring(const Ring& ring, std::size_t limit = 512);

/// Builds a ring from raw Cayley tables; zero and identity are located,
/// negation derived. Throws ConstructionError (non-group addition, missing
/// identity, dimension mismatch, failed axiom).
RingHandle table_ring(const Table& add, const Table& mul,
                      std::vector<std::string> labels = {},
                      const BuildOptions& opts = {});

}  // namespace ringlab
