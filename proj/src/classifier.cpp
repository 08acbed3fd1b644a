#include "ringlab/classifier.hpp"

#include "ringlab/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace ringlab {

const std::vector<std::pair<const char*, bool Classification::*>>&
Classification::boolean_fields() {
  using C = Classification;
  static const std::vector<std::pair<const char*, bool C::*>> fields = {
      {"is_clean", &C::is_clean},
      {"is_strongly_clean", &C::is_strongly_clean},
      {"is_UC", &C::is_UC},
      {"is_USC", &C::is_USC},
      {"is_CUC", &C::is_CUC},
      {"is_CUSC", &C::is_CUSC},
      {"is_UUC", &C::is_UUC},
      {"is_UUSC", &C::is_UUSC},
      {"is_boolean", &C::is_boolean},
      {"is_reduced", &C::is_reduced},
      {"is_abelian", &C::is_abelian},
      {"is_commutative", &C::is_commutative},
      {"is_local", &C::is_local},
      {"is_regular", &C::is_regular},
      {"is_semi_potent", &C::is_semi_potent},
      {"is_potent", &C::is_potent},
      {"is_semi_boolean", &C::is_semi_boolean},
      {"one_is_two_good", &C::one_is_two_good},
      {"two_in_J", &C::two_in_J},
      {"R_equals_ucn0", &C::R_equals_ucn0},
      {"RmodJ_boolean", &C::RmodJ_boolean},
      {"U_equals_one_plus_J", &C::U_equals_one_plus_J},
  };
  return fields;
}

std::optional<bool> Classification::get(const std::string& field) const {
  for (const auto& [name, member] : boolean_fields())
    if (field == name) return this->*member;
  return std::nullopt;
}

namespace {

Json tri_json(TriState t) {
  switch (t) {
    case TriState::True: return true;
    case TriState::False: return false;
    default: return "skipped";
  }
}

// Records the first counterexample for `field` and clears the flag.
class Verdicts {
 public:
  Verdicts(const Ring& r, Classification& c) : r_(r), c_(c) {}

  void fail(bool Classification::*flag, const char* field, Elem a,
            const std::vector<Decomposition>& decomps = {}) {
    if (!(c_.*flag)) return;
    c_.*flag = false;
    std::vector<std::string> w{r_.label(a)};
    for (const auto& d : decomps) {
      w.push_back(r_.label(d.idempotent));
      w.push_back(r_.label(d.unit));
    }
    c_.witnesses[field] = std::move(w);
  }

 private:
  const Ring& r_;
  Classification& c_;
};

TriState quasi_duo(const Ring& q, bool left, const LatticeOptions& lattice,
                   std::vector<std::string>& witness) {
  try {
    const auto maximal = left ? maximal_left_ideals(q, lattice) : maximal_right_ideals(q, lattice);
    for (const auto& m : maximal) {
      if (is_two_sided_ideal(q, m)) continue;
      witness.clear();
      m.for_each([&](Elem e) { witness.push_back(q.label(e)); });
      return TriState::False;
    }
    return TriState::True;
  } catch (const SizeExceeded&) {
    return TriState::Skipped;
  } catch (const LatticeLimitExceeded&) {
    return TriState::Skipped;
  }
}

Classification classify_impl(const Ring& r, const InvariantCache& inv, const Ring& q,
                             const InvariantCache& qinv, const ClassifyOptions& opts) {
  Classification c;
  for (const auto& [name, member] : Classification::boolean_fields()) c.*member = true;
  using C = Classification;
  Verdicts v(r, c);

  for (Elem a : r.elements()) {
    const auto p = profile_element(r, inv, a, opts.usc_reading);
    const bool unit = inv.units.contains(a);
    if (!p.is_clean) v.fail(&C::is_clean, "is_clean", a);
    if (!p.is_strongly_clean) v.fail(&C::is_strongly_clean, "is_strongly_clean", a, p.clean);
    if (!p.is_uniquely_clean) v.fail(&C::is_UC, "is_UC", a, p.clean);
    if (!p.is_usc) v.fail(&C::is_USC, "is_USC", a, p.strongly_clean);
    if (p.is_clean && !p.is_uniquely_clean) v.fail(&C::is_CUC, "is_CUC", a, p.clean);
    if (p.is_clean && !p.is_usc) v.fail(&C::is_CUSC, "is_CUSC", a, p.strongly_clean);
    if (unit && !p.is_uniquely_clean) v.fail(&C::is_UUC, "is_UUC", a, p.clean);
    if (unit && !p.is_usc) v.fail(&C::is_UUSC, "is_UUSC", a, p.strongly_clean);

    if (!inv.idempotents.contains(a)) v.fail(&C::is_boolean, "is_boolean", a);
    if (a != r.zero() && inv.nilpotents.contains(a)) v.fail(&C::is_reduced, "is_reduced", a);
    if (!inv.center.contains(a)) {
      v.fail(&C::is_commutative, "is_commutative", a);
      if (inv.idempotents.contains(a)) v.fail(&C::is_abelian, "is_abelian", a);
    }
    if (!inv.ucn0.contains(a)) v.fail(&C::R_equals_ucn0, "R_equals_ucn0", a);

    if (c.is_regular) {
      bool found = false;
      for (Elem x : r.elements())
        if (r.mul(r.mul(a, x), a) == a) {
          found = true;
          break;
        }
      if (!found) v.fail(&C::is_regular, "is_regular", a);
    }

    if (c.is_semi_potent && !inv.radical.contains(a)) {
      auto has_idempotent = [&](const ElementSet& s) {
        bool found = false;
        s.for_each([&](Elem e) { found = found || (e != r.zero() && inv.idempotents.contains(e)); });
        return found;
      };
      if (!has_idempotent(left_principal(r, a)) || !has_idempotent(right_principal(r, a)))
        v.fail(&C::is_semi_potent, "is_semi_potent", a);
    }
  }

  // U = 1 + J
  ElementSet one_plus_j(r.order());
  inv.radical.for_each([&](Elem j) { one_plus_j.insert(r.add(r.one(), j)); });
  if (!(one_plus_j == inv.units)) {
    for (Elem a : r.elements())
      if (one_plus_j.contains(a) != inv.units.contains(a)) {
        v.fail(&C::U_equals_one_plus_J, "U_equals_one_plus_J", a);
        break;
      }
  }

  c.one_is_two_good = inv.two_good.contains(r.one());
  c.two_in_J = inv.radical.contains(r.add(r.one(), r.one()));

  // Predicates read off R/J.
  Verdicts vq(q, c);
  for (Elem a : q.elements())
    if (!qinv.idempotents.contains(a)) {
      vq.fail(&C::RmodJ_boolean, "RmodJ_boolean", a);
      break;
    }
  if (q.order() < 2) {
    c.is_local = false;
    c.witnesses["is_local"] = {"R/J is the zero ring"};
  } else {
    for (Elem a : q.elements())
      if (a != q.zero() && !qinv.units.contains(a)) {
        vq.fail(&C::is_local, "is_local", a);
        break;
      }
  }

  const auto lifting = idempotents_lift_mod(r, inv.idempotents, inv.radical);
  c.is_potent = c.is_semi_potent && lifting.lifts;
  if (!lifting.lifts) c.witnesses["is_potent"] = {r.label(lifting.failure)};
  else if (!c.is_semi_potent) c.witnesses["is_potent"] = c.witnesses["is_semi_potent"];
  c.is_semi_boolean = c.is_potent && c.RmodJ_boolean;
  if (!c.is_semi_boolean)
    c.witnesses["is_semi_boolean"] =
        c.is_potent ? c.witnesses["RmodJ_boolean"] : c.witnesses["is_potent"];

  std::vector<std::string> w;
  c.is_quasi_duo_left = quasi_duo(q, true, opts.lattice, w);
  if (c.is_quasi_duo_left == TriState::False) c.witnesses["is_quasi_duo_left"] = w;
  c.is_quasi_duo_right = quasi_duo(q, false, opts.lattice, w);
  if (c.is_quasi_duo_right == TriState::False) c.witnesses["is_quasi_duo_right"] = w;
  return c;
}

}  // namespace

RingAnalysis RingAnalysis::analyze(const RingHandle& ring, const ClassifyOptions& opts) {
  RingAnalysis a;
  a.ring = ring;
  a.inv = InvariantCache::compute(*ring);
  BuildOptions qopts;
  qopts.validate = false;
  a.radical_quotient = radical_quotient_ring(ring, a.inv.radical, qopts);
  a.quotient_inv = InvariantCache::compute(*a.radical_quotient.ring);
  a.cls = classify_impl(*ring, a.inv, *a.radical_quotient.ring, a.quotient_inv, opts);
  return a;
}

Classification classify(const RingHandle& ring, const ClassifyOptions& opts) {
  return RingAnalysis::analyze(ring, opts).cls;
}

std::vector<ElementProfile> classify_element_summary(const Ring& r, const InvariantCache& inv,
                                                     UscReading reading) {
  std::vector<ElementProfile> out;
  out.reserve(r.order());
  for (Elem a : r.elements()) out.push_back(profile_element(r, inv, a, reading));
  return out;
}

Json to_json(const Classification& c) {
  Json j = Json::object();
  for (const auto& [name, member] : Classification::boolean_fields()) {
    j[name] = c.*member;
    if (std::string_view(name) == "is_semi_boolean") {
      j["is_quasi_duo_left"] = tri_json(c.is_quasi_duo_left);
      j["is_quasi_duo_right"] = tri_json(c.is_quasi_duo_right);
    }
  }
  Json w = Json::object();
  for (const auto& [field, labels] : c.witnesses) w[field] = labels;
  j["witnesses"] = w;
  return j;
}

// ---- isomorphism ------------------------------------------------------------

namespace {

using Fingerprint = std::array<std::uint32_t, 9>;

std::vector<Fingerprint> fingerprints(const Ring& r) {
  const auto idem = idempotents(r);
  const auto unit = units(r).members;
  const auto nil = nilpotents(r);
  const auto cent = center(r);
  std::vector<Fingerprint> out(r.order());
  std::vector<Elem> seen_at(r.order());
  for (Elem a : r.elements()) {
    std::uint32_t additive = 1;
    for (Elem x = a; x != r.zero(); x = r.add(x, a)) ++additive;
    // Power sequence a, a², ...: steps before it cycles and cycle length.
    std::fill(seen_at.begin(), seen_at.end(), kNoElem);
    Elem x = a;
    std::uint32_t k = 1;
    while (seen_at[x] == kNoElem) {
      seen_at[x] = k++;
      x = r.mul(x, a);
    }
    const std::uint32_t tail = seen_at[x] - 1, cycle = k - seen_at[x];
    out[a] = {additive,
              static_cast<std::uint32_t>(idem.contains(a)),
              static_cast<std::uint32_t>(unit.contains(a)),
              static_cast<std::uint32_t>(nil.contains(a)),
              static_cast<std::uint32_t>(cent.contains(a)),
              static_cast<std::uint32_t>(left_principal(r, a).size()),
              static_cast<std::uint32_t>(right_principal(r, a).size()),
              tail,
              cycle};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Ring& r1, const Ring& r2)
      : r1_(r1), r2_(r2), f1_(fingerprints(r1)), f2_(fingerprints(r2)) {}

  std::optional<std::vector<Elem>> run() {
    auto s1 = f1_, s2 = f2_;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    choose_generators();
    State st{std::vector<Elem>(r1_.order(), kNoElem), std::vector<Elem>(r2_.order(), kNoElem), {}};
    if (!extend(st, r1_.zero(), r2_.zero()) || !extend(st, r1_.one(), r2_.one()))
      return std::nullopt;
    if (!dfs(0, st)) return std::nullopt;
    return result_;
  }

 private:
  struct State {
    std::vector<Elem> phi;
    std::vector<Elem> psi;
    std::vector<Elem> mapped;
  };

  // Adds a -> b and closes under +, · ; false on a conflict.
  bool extend(State& st, Elem a, Elem b) {
    auto assign = [&](Elem x, Elem y) {
      if (st.phi[x] != kNoElem) return st.phi[x] == y;
      if (st.psi[y] != kNoElem || f1_[x] != f2_[y]) return false;
      st.phi[x] = y;
      st.psi[y] = x;
      st.mapped.push_back(x);
      return true;
    };
    std::size_t next = st.mapped.size();
    if (!assign(a, b)) return false;
    while (next < st.mapped.size()) {
      const Elem x = st.mapped[next++];
      for (std::size_t i = 0; i < next; ++i) {
        const Elem z = st.mapped[i];
        const Elem px = st.phi[x], pz = st.phi[z];
        if (!assign(r1_.add(x, z), r2_.add(px, pz))) return false;
        if (!assign(r1_.mul(x, z), r2_.mul(px, pz))) return false;
        if (!assign(r1_.mul(z, x), r2_.mul(pz, px))) return false;
      }
    }
    return true;
  }

  void choose_generators() {
    std::map<Fingerprint, std::size_t> class_size;
    for (const auto& f : f1_) ++class_size[f];
    // Closure of the chosen generators in r1 alone.
    ElementSet closed(r1_.order());
    std::vector<Elem> list;
    auto close_with = [&](Elem g) {
      std::size_t next = list.size();
      auto push = [&](Elem x) {
        if (!closed.contains(x)) {
          closed.insert(x);
          list.push_back(x);
        }
      };
      push(g);
      while (next < list.size()) {
        const Elem x = list[next++];
        for (std::size_t i = 0; i < next; ++i) {
          push(r1_.add(x, list[i]));
          push(r1_.mul(x, list[i]));
          push(r1_.mul(list[i], x));
        }
      }
    };
    close_with(r1_.zero());
    close_with(r1_.one());
    while (closed.size() < r1_.order()) {
      Elem best = kNoElem;
      for (Elem a : r1_.elements())
        if (!closed.contains(a) &&
            (best == kNoElem || class_size[f1_[a]] < class_size[f1_[best]]))
          best = a;
      generators_.push_back(best);
      close_with(best);
    }
  }

  bool dfs(std::size_t i, const State& st) {
    if (i == generators_.size()) {
      if (st.mapped.size() != r1_.order()) return false;
      result_ = st.phi;
      return true;
    }
    const Elem g = generators_[i];
    if (st.phi[g] != kNoElem) return dfs(i + 1, st);
    for (Elem b : r2_.elements()) {
      if (st.psi[b] != kNoElem || f2_[b] != f1_[g]) continue;
      State next = st;
      if (extend(next, g, b) && dfs(i + 1, next)) return true;
    }
    return false;
  }

  const Ring& r1_;
  const Ring& r2_;
  std::vector<Fingerprint> f1_, f2_;
  std::vector<Elem> generators_;
  std::vector<Elem> result_;
};

}  // namespace

std::optional<std::vector<Elem>> check_isomorphic(const Ring& r1, const Ring& r2,
                                                  std::size_t limit) {
  if (r1.order() != r2.order()) return std::nullopt;
  if (r1.order() > limit) throw SizeExceeded("isomorphism search", r1.order(), limit);
  auto map = IsoSearch(r1, r2).run();
  if (map && !is_ring_isomorphism(r1, r2, *map))
    throw Error("isomorphism search produced an invalid map");
  return map;
}

bool is_ring_isomorphism(const Ring& r1, const Ring& r2, const std::vector<Elem>& map) {
  if (r1.order() != r2.order() || map.size() != r1.order()) return false;
  ElementSet image(r2.order());
  for (Elem m : map) {
    if (m >= r2.order() || image.contains(m)) return false;
    image.insert(m);
  }
  if (map[r1.one()] != r2.one()) return false;
  for (Elem a : r1.elements())
    for (Elem b : r1.elements()) {
      if (map[r1.add(a, b)] != r2.add(map[a], map[b])) return false;
      if (map[r1.mul(a, b)] != r2.mul(map[a], map[b])) return false;
    }
  return true;
}

}  // namespace ringlab
