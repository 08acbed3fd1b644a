#include "ringlab/invariants.hpp"

#include "ringlab/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ringlab {

ElementSet idempotents(const Ring& r) {
  ElementSet out(r.order());
  for (Elem a : r.elements())
    if (r.mul(a, a) == a) out.insert(a);
  return out;
}

UnitGroup units(const Ring& r) {
  UnitGroup g{ElementSet(r.order()), std::vector<Elem>(r.order(), kNoElem)};
  for (Elem u : r.elements()) {
    if (g.inverse[u] != kNoElem) continue;
    for (Elem v : r.elements()) {
      if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) {
        g.inverse[u] = v;
        g.inverse[v] = u;
        g.members.insert(u);
        g.members.insert(v);
        break;
      }
    }
  }
  return g;
}

ElementSet nilpotents(const Ring& r) {
  // If a is nilpotent its index is at most |R|, so a^(2^m) = 0 once 2^m >= |R|.
  std::size_t squarings = 0;
  while ((std::size_t{1} << squarings) < r.order()) ++squarings;
  ElementSet out(r.order());
  for (Elem a : r.elements()) {
    Elem p = a;
    for (std::size_t i = 0; i < squarings && p != r.zero(); ++i) p = r.mul(p, p);
    if (p == r.zero()) out.insert(a);
  }
  return out;
}

ElementSet jacobson_radical(const Ring& r, const ElementSet& unit_set) {
  ElementSet out(r.order());
  for (Elem a : r.elements()) {
    bool quasi_regular = true;
    for (Elem x : r.elements()) {
      if (!unit_set.contains(r.sub(r.one(), r.mul(x, a)))) {
        quasi_regular = false;
        break;
      }
    }
    if (quasi_regular) out.insert(a);
  }
  return out;
}

ElementSet jacobson_radical(const Ring& r) { return jacobson_radical(r, units(r).members); }

ElementSet center(const Ring& r) {
  ElementSet out(r.order());
  for (Elem a : r.elements()) {
    bool central = true;
    for (Elem x : r.elements()) {
      if (r.mul(a, x) != r.mul(x, a)) {
        central = false;
        break;
      }
    }
    if (central) out.insert(a);
  }
  return out;
}

ElementSet two_good_elements(const Ring& r, const ElementSet& unit_set) {
  ElementSet out(r.order());
  const auto us = unit_set.members();
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i; j < us.size(); ++j) out.insert(r.add(us[i], us[j]));
  return out;
}

ElementSet ucn0(const Ring& r, const ElementSet& idem, const ElementSet& cent,
                const ElementSet& radical) {
  ElementSet out(r.order());
  (idem & cent).for_each([&](Elem e) { radical.for_each([&](Elem j) { out.insert(r.add(e, j)); }); });
  return out;
}

InvariantCache InvariantCache::compute(const Ring& r) {
  InvariantCache c;
  c.idempotents = ringlab::idempotents(r);
  auto u = ringlab::units(r);
  c.units = std::move(u.members);
  c.inverse = std::move(u.inverse);
  c.nilpotents = ringlab::nilpotents(r);
  c.radical = jacobson_radical(r, c.units);
  c.center = ringlab::center(r);
  c.two_good = two_good_elements(r, c.units);
  c.ucn0 = ringlab::ucn0(r, c.idempotents, c.center, c.radical);
  return c;
}

// ---- ideals ---------------------------------------------------------------

ElementSet ideal_generated(const Ring& r, const ElementSet& generators) {
  ElementSet s(r.order());
  std::vector<Elem> list;
  std::size_t next = 0;
  auto push = [&](Elem x) {
    if (!s.contains(x)) {
      s.insert(x);
      list.push_back(x);
    }
  };
  push(r.zero());
  generators.for_each(push);
  while (next < list.size()) {
    const Elem x = list[next++];
    for (Elem y : r.elements()) {
      push(r.mul(y, x));
      push(r.mul(x, y));
    }
    // Every pair is summed when the later of the two is processed.
    for (std::size_t i = 0; i < next; ++i) push(r.add(x, list[i]));
  }
  return s;
}

bool is_additive_subgroup(const Ring& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(r.neg(a))) return false;
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
  }
  return true;
}

namespace {

bool absorbs(const Ring& r, const ElementSet& s, bool left) {
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    for (Elem x : r.elements())
      if (!s.contains(left ? r.mul(x, a) : r.mul(a, x))) {
        ok = false;
        return;
      }
  });
  return ok;
}

// L + C for additive subgroups L and C.
ElementSet subgroup_sum(const Ring& r, const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet out = lhs;
  const auto base = lhs.members();
  rhs.for_each([&](Elem c) {
    if (out.contains(c)) return;
    for (Elem l : base) out.insert(r.add(l, c));
  });
  return out;
}

std::vector<ElementSet> one_sided_ideals(const Ring& r, const LatticeOptions& opts, bool left) {
  if (r.order() > opts.order_limit)
    throw SizeExceeded("ideal lattice enumeration", r.order(), opts.order_limit);
  std::unordered_set<ElementSet, ElementSetHash> cyclic_seen;
  std::vector<ElementSet> cyclic;
  for (Elem a : r.elements()) {
    auto c = left ? left_principal(r, a) : right_principal(r, a);
    if (cyclic_seen.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> queue;
  ElementSet zero_ideal(r.order(), {r.zero()});
  seen.insert(zero_ideal);
  queue.push_back(zero_ideal);
  while (!queue.empty()) {
    ElementSet current = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : cyclic) {
      if (c.is_subset_of(current)) continue;
      auto sum = subgroup_sum(r, current, c);
      if (seen.insert(sum).second) {
        if (seen.size() > opts.count_limit) throw LatticeLimitExceeded(opts.count_limit);
        queue.push_back(std::move(sum));
      }
    }
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<ElementSet> maximal_among(const Ring& r, const std::vector<ElementSet>& ideals,
                                      bool left) {
  const auto whole = ElementSet::full(r.order());
  std::vector<ElementSet> principal;
  principal.reserve(r.order());
  for (Elem a : r.elements()) principal.push_back(left ? left_principal(r, a) : right_principal(r, a));
  std::vector<ElementSet> out;
  for (const auto& m : ideals) {
    if (m == whole) continue;
    bool maximal = true;
    for (Elem a : r.elements()) {
      if (m.contains(a)) continue;
      if (!(subgroup_sum(r, m, principal[a]) == whole)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

}  // namespace

bool is_left_ideal(const Ring& r, const ElementSet& s) {
  return is_additive_subgroup(r, s) && absorbs(r, s, true);
}
bool is_right_ideal(const Ring& r, const ElementSet& s) {
  return is_additive_subgroup(r, s) && absorbs(r, s, false);
}
bool is_two_sided_ideal(const Ring& r, const ElementSet& s) {
  return is_additive_subgroup(r, s) && absorbs(r, s, true) && absorbs(r, s, false);
}

LiftingResult idempotents_lift_mod(const Ring& r, const ElementSet& idem,
                                   const ElementSet& ideal) {
  if (!is_two_sided_ideal(r, ideal))
    throw ConstructionError("idempotent lifting: the given set is not a two-sided ideal");
  LiftingResult out;
  for (Elem x : r.elements()) {
    if (!ideal.contains(r.sub(r.mul(x, x), x))) continue;
    Elem lift = kNoElem;
    idem.for_each([&](Elem e) {
      if (lift == kNoElem && ideal.contains(r.sub(e, x))) lift = e;
    });
    if (lift == kNoElem) {
      out.lifts = false;
      out.failure = x;
      return out;
    }
    out.witnesses.emplace_back(x, lift);
  }
  return out;
}

ElementSet left_principal(const Ring& r, Elem a) {
  ElementSet s(r.order());
  for (Elem x : r.elements()) s.insert(r.mul(x, a));
  return s;
}

ElementSet right_principal(const Ring& r, Elem a) {
  ElementSet s(r.order());
  for (Elem x : r.elements()) s.insert(r.mul(a, x));
  return s;
}

std::vector<ElementSet> left_ideals(const Ring& r, const LatticeOptions& opts) {
  return one_sided_ideals(r, opts, true);
}
std::vector<ElementSet> right_ideals(const Ring& r, const LatticeOptions& opts) {
  return one_sided_ideals(r, opts, false);
}
std::vector<ElementSet> maximal_left_ideals(const Ring& r, const LatticeOptions& opts) {
  return maximal_among(r, left_ideals(r, opts), true);
}
std::vector<ElementSet> maximal_right_ideals(const Ring& r, const LatticeOptions& opts) {
  return maximal_among(r, right_ideals(r, opts), false);
}

}  // namespace ringlab
