#include "ringlab/poly_analyzer.hpp"

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

namespace {

using Coeffs = std::vector<Elem>;

Coeffs poly_mul(const Ring& r, const Coeffs& f, const Coeffs& g) {
  Coeffs out(f.size() + g.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == r.zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
  }
  return out;
}

bool is_constant(const Ring& r, const Coeffs& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] != r.zero()) return false;
  return true;
}

bool equals_padded(const Ring& r, const Coeffs& long_one, const Coeffs& short_one) {
  for (std::size_t i = 0; i < long_one.size(); ++i)
    if (long_one[i] != (i < short_one.size() ? short_one[i] : r.zero())) return false;
  return true;
}

std::string show(const Ring& r, const Coeffs& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + r.label(f[i]);
  return out + "]";
}

}  // namespace

PolyRingView::PolyRingView(RingHandle base) : base_(std::move(base)) {
  const Ring& r = *base_;
  for (Elem a : r.elements())
    for (Elem b : r.elements())
      if (r.mul(a, b) != r.mul(b, a))
        throw Error("polynomial analysis needs a commutative base; " + display_name(r.spec()) +
                    " has " + r.label(a) + "·" + r.label(b) + " != " + r.label(b) + "·" +
                    r.label(a));
  inv_ = InvariantCache::compute(r);
}

PolyCleanSet poly_clean_set(const PolyRingView& view) {
  const Ring& r = view.base();
  const auto& inv = view.invariants();
  PolyCleanSet out{ElementSet(r.order()), {}, inv.nilpotents};
  inv.idempotents.for_each([&](Elem e) {
    ElementSet fiber(r.order());
    inv.units.for_each([&](Elem u) { fiber.insert(r.add(e, u)); });
    out.constant_terms |= fiber;
    out.constants_by_idempotent.emplace_back(e, std::move(fiber));
  });
  return out;
}

PolyVerdict poly_is_cusc(const PolyRingView& view) {
  const Ring& r = view.base();
  const auto cs = poly_clean_set(view);
  // A clean f = e + u forces e constant and u = f - e; f - e is a unit of
  // R[x] iff f0 - e is a unit of R, since the tail of f is nilpotent.
  for (Elem c : r.elements()) {
    std::vector<std::string> idems;
    for (const auto& [e, fiber] : cs.constants_by_idempotent)
      if (fiber.contains(c)) idems.push_back(r.label(e));
    if (idems.size() > 1) {
      PolyVerdict v{false, {r.label(c)}};
      v.witness.insert(v.witness.end(), idems.begin(), idems.end());
      return v;
    }
  }
  return {true, {}};
}

PolyVerdict poly_is_clean(const PolyRingView& view) {
  const Ring& r = view.base();
  const auto cs = poly_clean_set(view);
  if (!cs.higher_coefficients.contains(r.one())) return {false, {"x"}};
  for (Elem c : r.elements())
    if (!cs.higher_coefficients.contains(c)) {
      const std::string coeff = r.label(c);
      return {false, {c == r.one() ? "x" : "(" + coeff + ")*x"}};
    }
  for (Elem c : r.elements())
    if (!cs.constant_terms.contains(c)) return {false, {r.label(c)}};
  return {true, {}};
}

PolyValidation validate_poly_view(const PolyRingView& view, std::size_t max_degree,
                                  std::size_t sample_limit) {
  const Ring& r = view.base();
  const auto& inv = view.invariants();
  const std::size_t q = r.order();
  std::size_t d = max_degree;
  auto count = [q](std::size_t degree) {
    std::size_t n = 1;
    for (std::size_t i = 0; i <= degree; ++i) n *= q;
    return n;
  };
  while (d > 0 && count(d) > sample_limit) --d;
  PolyValidation out;
  out.degree = d;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.detail = std::move(msg);
    return out;
  };

  const std::size_t total = count(d);
  auto decode = [&](std::size_t id) {
    Coeffs f(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      f[i] = static_cast<Elem>(id % q);
      id /= q;
    }
    return f;
  };

  BuildOptions topts;
  topts.validate = false;
  const auto trunc = trunc_poly_ring(view.base_handle(), d + 1, topts);
  const auto trunc_units = units(*trunc).members;
  const auto trunc_idem = idempotents(*trunc);

  for (std::size_t id = 0; id < total; ++id) {
    const auto f = decode(id);
    // Idempotents of R[x] in this degree range are the constants of Id(R).
    const bool idem = equals_padded(r, poly_mul(r, f, f), f);
    const bool expected_idem = is_constant(r, f) && inv.idempotents.contains(f[0]);
    if (idem != expected_idem) return fail("idempotent characterization fails at " + show(r, f));

    bool nil_tail = true;
    for (std::size_t i = 1; i <= d; ++i) nil_tail = nil_tail && inv.nilpotents.contains(f[i]);
    if (!nil_tail) continue;
    const bool unit_const = inv.units.contains(f[0]);
    if (trunc_units.contains(static_cast<Elem>(id)) != unit_const)
      return fail("unit characterization disagrees with the truncated ring at " + show(r, f));
    if (!unit_const) continue;
    // Series inverse g with f·g = 1; its degree is at most d·|R|.
    const std::size_t terms = d * q + 1;
    Coeffs g(terms, r.zero());
    const Elem u0 = inv.inverse[f[0]];
    g[0] = u0;
    for (std::size_t k = 1; k < terms; ++k) {
      Elem acc = r.zero();
      for (std::size_t i = 1; i <= std::min(k, d); ++i) acc = r.add(acc, r.mul(f[i], g[k - i]));
      g[k] = r.neg(r.mul(u0, acc));
    }
    const Coeffs one{r.one()};
    if (!equals_padded(r, poly_mul(r, f, g), one))
      return fail("series inverse is not a polynomial inverse for " + show(r, f));
  }

  // Constant terms decompose in R[x]/(x^(d+1)) exactly as in R.
  for (Elem c : r.elements()) {
    std::vector<std::pair<Elem, Elem>> in_trunc, in_base;
    trunc_idem.for_each([&](Elem e) {
      const Elem u = trunc->sub(c, e);
      if (trunc_units.contains(u)) in_trunc.emplace_back(e, u);
    });
    inv.idempotents.for_each([&](Elem e) {
      const Elem u = r.sub(c, e);
      if (inv.units.contains(u)) in_base.emplace_back(e, u);
    });
    if (in_trunc != in_base)
      return fail("decompositions of the constant " + r.label(c) + " differ after truncation");
  }
  return out;
}

}  // namespace ringlab
