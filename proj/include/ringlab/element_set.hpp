#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <vector>

namespace ringlab {

/// Dense element identifier, 0 .. order-1.
using Elem = std::uint32_t;
inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// Subset of a ring's elements with bitset semantics.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t order) : bits_(order) {}
  ElementSet(std::size_t order, std::initializer_list<Elem> members)
      : bits_(order) {
    for (Elem e : members) insert(e);
  }

  static ElementSet full(std::size_t order) {
    ElementSet s(order);
    s.bits_.set();
    return s;
  }

  std::size_t order() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  /// Smallest member, or kNoElem.
  Elem first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? kNoElem : static_cast<Elem>(p);
  }
  Elem next(Elem after) const {
    auto p = bits_.find_next(after);
    return p == Bits::npos ? kNoElem : static_cast<Elem>(p);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto p = bits_.find_first(); p != Bits::npos; p = bits_.find_next(p))
      f(static_cast<Elem>(p));
  }

  /// Members in increasing order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = bits_.size();
    for_each([&](Elem e) { h = h * 1000003u ^ (e + 0x9e3779b9u); });
    return h;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ringlab
