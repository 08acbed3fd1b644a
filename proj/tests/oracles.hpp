#pragma once

// Brute-force reference computations. They read only Ring::add/mul/one/zero
// and deliberately share no code with the library's invariants.

#include "ringlab/ring.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using ringlab::Elem;
using ringlab::Ring;

inline bool is_unit(const Ring& r, Elem a) {
  for (Elem b = 0; b < r.order(); ++b)
    if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
  return false;
}

inline std::vector<Elem> idempotents(const Ring& r) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

inline std::vector<Elem> units(const Ring& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.order(); ++a)
    if (is_unit(r, a)) out.push_back(a);
  return out;
}

/// (idempotent, unit, commuting) for every way of writing a = e + u.
using Decomp = std::tuple<Elem, Elem, bool>;

inline std::vector<Decomp> decompositions(const Ring& r, const std::vector<Elem>& id,
                                          const std::vector<Elem>& u, Elem a) {
  std::vector<Decomp> out;
  for (Elem e : id)
    for (Elem v : u)
      if (r.add(e, v) == a) out.emplace_back(e, v, r.mul(e, v) == r.mul(v, e));
  return out;
}

/// Additive closure of a set together with left multiples.
inline std::set<Elem> left_closure(const Ring& r, std::set<Elem> s) {
  s.insert(r.zero());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem x : cur) {
      for (Elem y : cur) grew |= s.insert(r.add(x, y)).second;
      for (Elem k = 0; k < r.order(); ++k) grew |= s.insert(r.mul(k, x)).second;
    }
  }
  return s;
}

/// All left ideals, by growing every known ideal with one more element.
inline std::vector<std::set<Elem>> left_ideals(const Ring& r) {
  std::set<std::set<Elem>> seen = {left_closure(r, {})};
  std::vector<std::set<Elem>> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (Elem a = 0; a < r.order(); ++a) {
      if (cur.count(a)) continue;
      auto next = cur;
      next.insert(a);
      next = left_closure(r, std::move(next));
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Intersection of the maximal proper left ideals (inclusion-maximal).
inline std::set<Elem> jacobson_from_maximal(const Ring& r) {
  auto all = left_ideals(r);
  std::erase_if(all, [&](const auto& s) { return s.size() == r.order(); });
  std::set<Elem> out;
  for (Elem a = 0; a < r.order(); ++a) out.insert(a);
  for (const auto& m : all) {
    const bool maximal = std::none_of(all.begin(), all.end(), [&](const auto& big) {
      return big.size() > m.size() && std::includes(big.begin(), big.end(), m.begin(), m.end());
    });
    if (!maximal) continue;
    std::set<Elem> keep;
    std::set_intersection(out.begin(), out.end(), m.begin(), m.end(), std::inserter(keep, keep.end()));
    out = std::move(keep);
  }
  return out;
}

/// Ring axioms on raw tables, checked exhaustively.
inline bool is_ring(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul) {
  const std::size_t n = add.size();
  Elem zero = n, one = n;
  for (Elem z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = add[z][a] == a && add[a][z] == a;
    if (ok) zero = z;
  }
  for (Elem o = 0; o < n && one == n; ++o) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = mul[o][a] == a && mul[a][o] == a;
    if (ok) one = o;
  }
  if (zero == n || one == n) return false;
  for (Elem a = 0; a < n; ++a) {
    bool has_neg = false;
    for (Elem b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) return false;
      has_neg |= add[a][b] == zero;
      for (Elem c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) return false;
      }
    }
    if (!has_neg) return false;
  }
  return true;
}

}  // namespace oracle
