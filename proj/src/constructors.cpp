#include "ringlab/constructors.hpp"

#include "ringlab/error.hpp"
#include "ringlab/invariants.hpp"
#include "ringlab/overloaded.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <numeric>

namespace ringlab {

namespace {

using BinOp = std::function<Elem(Elem, Elem)>;
using LabelFn = std::function<std::string(Elem)>;
using Digits = boost::container::small_vector<Elem, 16>;

// Elements of a finite direct sum, digit 0 least significant.
// Small codecs keep every decoded tuple, which spares the divisions when a
// whole table is materialized.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
    std::size_t total = 1;
    for (std::size_t r : radices_) {
      if (r == 0 || total > kCacheLimit / r) return;
      total *= r;
    }
    auto cache = std::make_shared<std::vector<Elem>>(total * radices_.size());
    for (std::size_t x = 0; x < total; ++x) {
      const auto d = compute(static_cast<Elem>(x));
      std::copy(d.begin(), d.end(), cache->begin() + x * radices_.size());
    }
    cache_ = std::move(cache);
  }

  std::size_t width() const { return radices_.size(); }

  Digits decode(Elem x) const {
    if (!cache_) return compute(x);
    const auto first = cache_->begin() + std::size_t{x} * radices_.size();
    return Digits(first, first + radices_.size());
  }

  Elem encode(const Digits& d) const {
    std::size_t x = 0;
    for (std::size_t i = radices_.size(); i-- > 0;) x = x * radices_[i] + d[i];
    return static_cast<Elem>(x);
  }

 private:
  static constexpr std::size_t kCacheLimit = std::size_t{1} << 16;

  Digits compute(Elem x) const {
    Digits d(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      d[i] = static_cast<Elem>(x % radices_[i]);
      x = static_cast<Elem>(x / radices_[i]);
    }
    return d;
  }

  std::vector<std::size_t> radices_;
  std::shared_ptr<const std::vector<Elem>> cache_;
};

std::size_t checked_order(const std::vector<std::size_t>& radices, const BuildOptions& opts,
                          const std::string& what) {
  std::size_t n = 1;
  bool overflow = false;
  for (std::size_t r : radices) {
    if (r != 0 && n > std::numeric_limits<std::size_t>::max() / r) {
      overflow = true;
      n = std::numeric_limits<std::size_t>::max();
      break;
    }
    n *= r;
  }
  if (overflow || n > opts.max_order) throw SizeExceeded(what, n, opts.max_order);
  return n;
}

// Wraps a label in parentheses unless it is a single token at top level.
std::string atom(const std::string& s) {
  int depth = 0;
  bool compound = !s.empty() && s.front() == '-';
  bool enclosed = !s.empty() && s.front() == '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') {
      if (--depth == 0 && i + 1 < s.size()) enclosed = false;
    } else if (depth == 0 && (c == ' ' || c == '+' || c == '*' || c == ';' || c == ','))
      compound = true;
  }
  return compound && !enclosed ? "(" + s + ")" : s;
}

RingHandle make_ring(std::size_t order, Elem zero, Elem one, BinOp add, BinOp mul,
                     LabelFn label, SpecPtr spec, const BuildOptions& opts) {
  Ring::Definition def;
  def.order = order;
  def.zero = zero;
  def.one = one;
  def.add = std::move(add);
  def.mul = std::move(mul);
  def.label = std::move(label);
  def.spec = std::move(spec);
  return Ring::create(std::move(def), opts);
}

std::vector<ElementRef> id_refs(const ElementSet& s) {
  std::vector<ElementRef> out;
  s.for_each([&](Elem e) { out.push_back(ElementRef{e}); });
  return out;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---- families -------------------------------------------------------------

RingHandle zn_impl(std::size_t n, SpecPtr spec, const BuildOptions& opts) {
  if (n == 0) throw ConstructionError("Z0 is not finite");
  checked_order({n}, opts, "Z" + std::to_string(n));
  return make_ring(
      n, 0, static_cast<Elem>(1 % n),
      [n](Elem a, Elem b) { return static_cast<Elem>((std::size_t{a} + b) % n); },
      [n](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % n); },
      [](Elem a) { return std::to_string(a); }, std::move(spec), opts);
}

using Poly = std::vector<std::size_t>;  // coefficients, low degree first

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::size_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::size_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

Poly monic_from_index(std::size_t index, std::size_t degree, std::size_t p) {
  Poly f(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, std::size_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      auto r = poly_mod(f, monic_from_index(idx, d, p), p);
      if (std::all_of(r.begin(), r.end(), [](std::size_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

RingHandle gf_impl(std::size_t p, std::size_t k, SpecPtr spec, const BuildOptions& opts) {
  if (!is_prime(p)) throw ConstructionError("GF: " + std::to_string(p) + " is not prime");
  if (k == 0) throw ConstructionError("GF: degree must be positive");
  const std::size_t n = checked_order(std::vector<std::size_t>(k, p), opts, "GF");
  Poly modulus;
  for (std::size_t idx = 0;; ++idx) {
    modulus = monic_from_index(idx, k, p);
    if (irreducible(modulus, p)) break;
  }
  MixedRadix codec(std::vector<std::size_t>(k, p));
  auto mul = [codec, modulus, p, k](Elem a, Elem b) {
    const auto da = codec.decode(a), db = codec.decode(b);
    Poly prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto r = poly_mod(std::move(prod), modulus, p);
    Digits d(k, 0);
    for (std::size_t i = 0; i < r.size(); ++i) d[i] = static_cast<Elem>(r[i]);
    return codec.encode(d);
  };
  auto add = [codec, p, k](Elem a, Elem b) {
    auto da = codec.decode(a);
    const auto db = codec.decode(b);
    for (std::size_t i = 0; i < k; ++i) da[i] = static_cast<Elem>((da[i] + db[i]) % p);
    return codec.encode(da);
  };
  auto label = [codec, k](Elem a) {
    const auto d = codec.decode(a);
    std::string out;
    for (std::size_t i = k; i-- > 0;) {
      if (d[i] == 0) continue;
      std::string term;
      if (i == 0) term = std::to_string(d[i]);
      else {
        term = d[i] == 1 ? "" : std::to_string(d[i]);
        term += i == 1 ? "a" : "a^" + std::to_string(i);
      }
      out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? std::string("0") : out;
  };
  return make_ring(n, 0, 1 % static_cast<Elem>(n), add, mul, label, std::move(spec), opts);
}

RingHandle product_impl(std::vector<RingHandle> fs, SpecPtr spec, const BuildOptions& opts) {
  std::vector<std::size_t> radices;
  for (const auto& f : fs) radices.push_back(f->order());
  const std::size_t n = checked_order(radices, opts, "product");
  MixedRadix codec(radices);
  Digits zero, one;
  for (const auto& f : fs) {
    zero.push_back(f->zero());
    one.push_back(f->one());
  }
  auto lift = [fs, codec](auto op) {
    return [fs, codec, op](Elem a, Elem b) {
      auto da = codec.decode(a);
      const auto db = codec.decode(b);
      for (std::size_t i = 0; i < fs.size(); ++i) da[i] = op(*fs[i], da[i], db[i]);
      return codec.encode(da);
    };
  };
  auto label = [fs, codec](Elem a) {
    const auto d = codec.decode(a);
    std::string out = "(";
    for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + fs[i]->label(d[i]);
    return out + ")";
  };
  return make_ring(n, codec.encode(zero), codec.encode(one),
                   lift([](const Ring& r, Elem x, Elem y) { return r.add(x, y); }),
                   lift([](const Ring& r, Elem x, Elem y) { return r.mul(x, y); }), label,
                   std::move(spec), opts);
}

// Square matrices over `base`; with `upper_only` the entries below the
// diagonal are fixed at zero.
RingHandle matrix_like(std::size_t n, const RingHandle& base, bool upper_only, SpecPtr spec,
                       const BuildOptions& opts) {
  if (n == 0) throw ConstructionError("matrix size must be positive");
  std::vector<std::size_t> slot(n * n, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!upper_only || i <= j) slot[i * n + j] = count++;
  const std::size_t order =
      checked_order(std::vector<std::size_t>(count, base->order()), opts,
                    (upper_only ? "T" : "M") + std::to_string(n) + "(" +
                        display_name(base->spec()) + ")");
  MixedRadix codec(std::vector<std::size_t>(count, base->order()));
  auto entry = [slot, n, base](const Digits& d, std::size_t i, std::size_t j) {
    const std::size_t s = slot[i * n + j];
    return s == SIZE_MAX ? base->zero() : d[s];
  };
  auto add = [codec, base, count](Elem a, Elem b) {
    auto da = codec.decode(a);
    const auto db = codec.decode(b);
    for (std::size_t s = 0; s < count; ++s) da[s] = base->add(da[s], db[s]);
    return codec.encode(da);
  };
  auto mul = [codec, base, slot, n, entry](Elem a, Elem b) {
    const auto da = codec.decode(a), db = codec.decode(b);
    Digits out(da.size(), base->zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t s = slot[i * n + j];
        if (s == SIZE_MAX) continue;
        Elem acc = base->zero();
        for (std::size_t k = 0; k < n; ++k)
          acc = base->add(acc, base->mul(entry(da, i, k), entry(db, k, j)));
        out[s] = acc;
      }
    return codec.encode(out);
  };
  auto label = [codec, base, n, entry](Elem a) {
    const auto d = codec.decode(a);
    std::string out = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ";";
      for (std::size_t j = 0; j < n; ++j)
        out += (j ? " " : "") + atom(base->label(entry(d, i, j)));
    }
    return out + ")";
  };
  Digits zero(count, base->zero()), one(count, base->zero());
  for (std::size_t i = 0; i < n; ++i) one[slot[i * n + i]] = base->one();
  return make_ring(order, codec.encode(zero), codec.encode(one), add, mul, label,
                   std::move(spec), opts);
}

QuotientResult quotient_impl(const RingHandle& base, const ElementSet& ideal, SpecPtr spec,
                             const BuildOptions& opts) {
  const Ring& r = *base;
  std::vector<Elem> projection(r.order(), kNoElem);
  std::vector<Elem> reps;
  const auto members = ideal.members();
  for (Elem x : r.elements()) {
    if (projection[x] != kNoElem) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) projection[r.add(x, i)] = id;
  }
  auto add = [base, reps, projection](Elem a, Elem b) {
    return projection[base->add(reps[a], reps[b])];
  };
  auto mul = [base, reps, projection](Elem a, Elem b) {
    return projection[base->mul(reps[a], reps[b])];
  };
  auto label = [base, reps](Elem a) { return "[" + base->label(reps[a]) + "]"; };
  auto ring = make_ring(reps.size(), projection[r.zero()], projection[r.one()], add, mul, label,
                        std::move(spec), opts);
  return {std::move(ring), std::move(projection), ideal};
}

SubringResult restrict_impl(const RingHandle& base, const ElementSet& members, Elem one,
                            SpecPtr spec, const BuildOptions& opts) {
  std::vector<Elem> embedding = members.members();
  std::vector<Elem> index(base->order(), kNoElem);
  for (std::size_t i = 0; i < embedding.size(); ++i) index[embedding[i]] = static_cast<Elem>(i);
  auto add = [base, embedding, index](Elem a, Elem b) {
    return index[base->add(embedding[a], embedding[b])];
  };
  auto mul = [base, embedding, index](Elem a, Elem b) {
    return index[base->mul(embedding[a], embedding[b])];
  };
  auto label = [base, embedding](Elem a) { return base->label(embedding[a]); };
  auto ring = make_ring(embedding.size(), index[base->zero()], index[one], add, mul, label,
                        std::move(spec), opts);
  return {std::move(ring), std::move(embedding)};
}

SubringResult corner_impl(const RingHandle& base, Elem e, SpecPtr spec, const BuildOptions& opts) {
  const Ring& r = *base;
  if (e >= r.order() || r.mul(e, e) != e)
    throw ConstructionError("corner ring: element " + std::to_string(e) + " is not idempotent");
  ElementSet members(r.order());
  for (Elem x : r.elements()) members.insert(r.mul(r.mul(e, x), e));
  return restrict_impl(base, members, e, std::move(spec), opts);
}

SubringResult subring_impl(const RingHandle& base, const ElementSet& gens, SpecPtr spec,
                           const BuildOptions& opts) {
  const Ring& r = *base;
  ElementSet s(r.order());
  std::vector<Elem> list;
  auto push = [&](Elem x) {
    if (!s.contains(x)) {
      s.insert(x);
      list.push_back(x);
    }
  };
  push(r.zero());
  push(r.one());
  gens.for_each(push);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem x = list[i];
    push(r.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      push(r.add(x, list[j]));
      push(r.mul(x, list[j]));
      push(r.mul(list[j], x));
    }
  }
  return restrict_impl(base, s, r.one(), std::move(spec), opts);
}

// Renders sum_k c_k·name(k), omitting zero terms; "0" for the zero element.
template <typename NameFn>
std::string linear_label(const Ring& coeffs, const Digits& d, NameFn name) {
  std::vector<std::string> terms;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == coeffs.zero()) continue;
    const std::string basis = name(k);
    if (basis.empty()) terms.push_back(coeffs.label(d[k]));
    else if (d[k] == coeffs.one()) terms.push_back(basis);
    else terms.push_back(atom(coeffs.label(d[k])) + "*" + basis);
  }
  if (terms.empty()) return coeffs.label(coeffs.zero());
  if (terms.size() == 1) return terms.front();
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + atom(terms[i]);
  return out;
}

GroupRingResult group_ring_impl(const RingHandle& base, const GroupSpec& gspec, SpecPtr spec,
                                const BuildOptions& opts) {
  auto group = FiniteGroup::from_spec(gspec);
  const std::size_t g = group.order();
  const std::size_t order = checked_order(std::vector<std::size_t>(g, base->order()), opts,
                                          display_name(base->spec()) + display_name(gspec));
  MixedRadix codec(std::vector<std::size_t>(g, base->order()));
  auto add = [codec, base, g](Elem a, Elem b) {
    auto da = codec.decode(a);
    const auto db = codec.decode(b);
    for (std::size_t i = 0; i < g; ++i) da[i] = base->add(da[i], db[i]);
    return codec.encode(da);
  };
  auto mul = [codec, base, group, g](Elem a, Elem b) {
    const auto da = codec.decode(a), db = codec.decode(b);
    Digits out(g, base->zero());
    for (Elem x = 0; x < g; ++x) {
      if (da[x] == base->zero()) continue;
      for (Elem y = 0; y < g; ++y) {
        if (db[y] == base->zero()) continue;
        const Elem xy = group.mul(x, y);
        out[xy] = base->add(out[xy], base->mul(da[x], db[y]));
      }
    }
    return codec.encode(out);
  };
  auto label = [codec, base, group](Elem a) {
    return linear_label(*base, codec.decode(a), [&](std::size_t k) -> std::string {
      if (k == group.identity()) return "";
      const auto& name = group.name(static_cast<Elem>(k));
      return name.front() == '-' ? "(" + name + ")" : name;
    });
  };
  Digits zero(g, base->zero()), one(g, base->zero());
  one[group.identity()] = base->one();
  auto ring = make_ring(order, codec.encode(zero), codec.encode(one), add, mul, label,
                        std::move(spec), opts);

  GroupRingResult out{ring, group, {}, ElementSet(order), {}, {}};
  out.augmentation.resize(order);
  for (Elem a : ring->elements()) {
    const auto d = codec.decode(a);
    Elem s = base->zero();
    for (Elem c : d) s = base->add(s, c);
    out.augmentation[a] = s;
  }
  for (Elem r : base->elements()) {
    Digits d(g, base->zero());
    d[group.identity()] = r;
    out.coefficient_embedding.push_back(codec.encode(d));
  }
  ElementSet gens(order);
  for (Elem x = 0; x < g; ++x) {
    Digits d(g, base->zero());
    d[x] = base->one();
    const Elem as_elem = codec.encode(d);
    out.group_embedding.push_back(as_elem);
    gens.insert(ring->sub(ring->one(), as_elem));
  }
  out.augmentation_ideal = ideal_generated(*ring, gens);
  return out;
}

// ---- modules ----------------------------------------------------------------

Elem module_zero(const ModuleTables& m) {
  const std::size_t n = m.order();
  for (Elem z = 0; z < n; ++z) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = m.add[z][x] == x && m.add[x][z] == x;
    if (ok) return z;
  }
  return kNoElem;
}

std::string module_label(const ModuleTables& m, Elem x) {
  return m.labels.empty() ? std::to_string(x) : m.labels[x];
}

std::string at(std::initializer_list<Elem> w) {
  std::string out = " at (";
  bool first = true;
  for (Elem e : w) {
    out += (first ? "" : ", ") + std::to_string(e);
    first = false;
  }
  return out + ")";
}

bool square_table(const Table& t, std::size_t rows, std::size_t cols, std::size_t range) {
  if (t.size() != rows) return false;
  for (const auto& row : t) {
    if (row.size() != cols) return false;
    for (Elem v : row)
      if (v >= range) return false;
  }
  return true;
}

// Ring on pairs (r, m), r from `r`, m from `m`; the product is
// (r,m)(s,n) = (rs, rn + ms + mn), with mn = 0 when m.mul is empty.
RingHandle split_extension(const RingHandle& r, const ModuleTables& m, LabelFn label,
                           SpecPtr spec, const BuildOptions& opts) {
  const std::size_t mo = m.order();
  const Elem mz = module_zero(m);
  const std::size_t order = checked_order({mo, r->order()}, opts, display_name(*spec));
  auto tabs = std::make_shared<const ModuleTables>(m);
  auto add = [r, tabs, mo](Elem a, Elem b) {
    const Elem ra = a / mo, ma = a % mo, rb = b / mo, mb = b % mo;
    return static_cast<Elem>(r->add(ra, rb) * mo + tabs->add[ma][mb]);
  };
  auto mul = [r, tabs, mo](Elem a, Elem b) {
    const Elem ra = a / mo, ma = a % mo, rb = b / mo, mb = b % mo;
    Elem x = tabs->add[tabs->left[ra][mb]][tabs->right[ma][rb]];
    if (!tabs->mul.empty()) x = tabs->add[x][tabs->mul[ma][mb]];
    return static_cast<Elem>(r->mul(ra, rb) * mo + x);
  };
  if (!label)
    label = [r, tabs, mo](Elem a) {
      return "(" + r->label(a / mo) + ", " + module_label(*tabs, a % mo) + ")";
    };
  return make_ring(order, static_cast<Elem>(r->zero() * mo + mz),
                   static_cast<Elem>(r->one() * mo + mz), add, mul, label, std::move(spec), opts);
}

std::vector<Elem> endo_map_impl(const Ring& base, const Endomorphism& alpha) {
  std::vector<Elem> map(base.order());
  std::visit(Overloaded{
                 [&](const endo::Identity&) { std::iota(map.begin(), map.end(), Elem{0}); },
                 [&](const endo::Frobenius& f) {
                   for (Elem a : base.elements()) map[a] = base.pow(a, f.p);
                 },
                 [&](const endo::Explicit& e) {
                   if (e.images.size() != base.order())
                     throw ConstructionError("endomorphism map has " +
                                             std::to_string(e.images.size()) +
                                             " images for a ring of order " +
                                             std::to_string(base.order()));
                   for (Elem a : base.elements()) {
                     if (e.images[a] >= base.order())
                       throw ConstructionError("endomorphism image out of range" + at({a}));
                     map[a] = e.images[a];
                   }
                 },
             },
             alpha.node);
  if (map[base.one()] != base.one())
    throw ConstructionError("endomorphism does not fix the identity");
  for (Elem a : base.elements())
    for (Elem b : base.elements()) {
      if (map[base.add(a, b)] != base.add(map[a], map[b]))
        throw ConstructionError("endomorphism is not additive" + at({a, b}));
      if (map[base.mul(a, b)] != base.mul(map[a], map[b]))
        throw ConstructionError("endomorphism is not multiplicative" + at({a, b}));
    }
  return map;
}

RingHandle skew_impl(const RingHandle& base, const std::vector<Elem>& alpha, std::size_t n,
                     SpecPtr spec, const BuildOptions& opts) {
  if (n == 0) throw ConstructionError("truncation degree must be positive");
  const std::size_t order =
      checked_order(std::vector<std::size_t>(n, base->order()), opts, display_name(*spec));
  // powers[i][r] = α^i(r)
  std::vector<std::vector<Elem>> powers(n);
  powers[0].resize(base->order());
  std::iota(powers[0].begin(), powers[0].end(), Elem{0});
  for (std::size_t i = 1; i < n; ++i) {
    powers[i].resize(base->order());
    for (Elem r : base->elements()) powers[i][r] = alpha[powers[i - 1][r]];
  }
  MixedRadix codec(std::vector<std::size_t>(n, base->order()));
  auto add = [codec, base, n](Elem a, Elem b) {
    auto da = codec.decode(a);
    const auto db = codec.decode(b);
    for (std::size_t i = 0; i < n; ++i) da[i] = base->add(da[i], db[i]);
    return codec.encode(da);
  };
  auto mul = [codec, base, n, powers](Elem a, Elem b) {
    const auto da = codec.decode(a), db = codec.decode(b);
    Digits out(n, base->zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (da[i] == base->zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        out[i + j] = base->add(out[i + j], base->mul(da[i], powers[i][db[j]]));
    }
    return codec.encode(out);
  };
  std::string var = "x";
  for (const char* candidate : {"x", "y", "z", "t", "w"}) {
    const bool clash = std::any_of(base->labels().begin(), base->labels().end(),
                                   [&](const std::string& l) { return l.find(candidate) != std::string::npos; });
    if (!clash) {
      var = candidate;
      break;
    }
  }
  auto label = [codec, base, var](Elem a) {
    return linear_label(*base, codec.decode(a), [&](std::size_t k) -> std::string {
      if (k == 0) return "";
      return k == 1 ? var : var + "^" + std::to_string(k);
    });
  };
  Digits zero(n, base->zero()), one(n, base->zero());
  one[0] = base->one();
  return make_ring(order, codec.encode(zero), codec.encode(one), add, mul, label,
                   std::move(spec), opts);
}

RingHandle opposite_impl(const RingHandle& base, SpecPtr spec, const BuildOptions& opts) {
  return make_ring(
      base->order(), base->zero(), base->one(),
      [base](Elem a, Elem b) { return base->add(a, b); },
      [base](Elem a, Elem b) { return base->mul(b, a); },
      [base](Elem a) { return base->label(a); }, std::move(spec), opts);
}

void require(const ModuleCheck& check, const std::string& what) {
  if (!check.ok) throw ConstructionError(what + ": " + check.message);
}

RingHandle formal_triangular_impl(const RingHandle& a, const RingHandle& b,
                                  const ModuleTables& m, SpecPtr spec,
                                  const BuildOptions& opts) {
  require(validate_bimodule(*a, *b, m), "formal triangular ring");
  const std::size_t mo = m.order(), bo = b->order();
  const Elem mz = module_zero(m);
  const std::size_t order = checked_order({bo, mo, a->order()}, opts, display_name(*spec));
  auto tabs = std::make_shared<const ModuleTables>(m);
  // (a, m, b) is stored at (a·|M| + m)·|B| + b.
  auto split = [mo, bo](Elem x) {
    return std::array<Elem, 3>{static_cast<Elem>(x / bo / mo), static_cast<Elem>(x / bo % mo),
                               static_cast<Elem>(x % bo)};
  };
  auto join = [mo, bo](Elem x, Elem y, Elem z) {
    return static_cast<Elem>((std::size_t{x} * mo + y) * bo + z);
  };
  auto add = [a, b, tabs, split, join](Elem x, Elem y) {
    const auto p = split(x), q = split(y);
    return join(a->add(p[0], q[0]), tabs->add[p[1]][q[1]], b->add(p[2], q[2]));
  };
  auto mul = [a, b, tabs, split, join](Elem x, Elem y) {
    const auto p = split(x), q = split(y);
    return join(a->mul(p[0], q[0]), tabs->add[tabs->left[p[0]][q[1]]][tabs->right[p[1]][q[2]]],
                b->mul(p[2], q[2]));
  };
  auto label = [a, b, tabs, split](Elem x) {
    const auto p = split(x);
    return "(" + atom(a->label(p[0])) + " " + atom(module_label(*tabs, p[1])) + ";0 " +
           atom(b->label(p[2])) + ")";
  };
  return make_ring(order, join(a->zero(), mz, b->zero()), join(a->one(), mz, b->one()), add, mul,
                   label, std::move(spec), opts);
}

RingHandle morita_impl(const RingHandle& a, const RingHandle& b, const ModuleTables& m,
                       const ModuleTables& n, SpecPtr spec, const BuildOptions& opts) {
  require(validate_bimodule(*a, *b, m), "Morita context, module M");
  require(validate_bimodule(*b, *a, n), "Morita context, module N");
  const std::size_t ao = a->order(), mo = m.order(), no = n.order();
  checked_order({ao, b->order(), mo, no}, opts, display_name(*spec));
  // A×B with (x, y) stored at x + |A|·y, and M⊕N with (m, n) at m + |M|·n.
  auto ab = product_impl({a, b}, product({a->spec_ptr(), b->spec_ptr()}), opts);
  ModuleTables sum;
  const std::size_t so = mo * no;
  sum.add.assign(so, std::vector<Elem>(so));
  sum.left.assign(ab->order(), std::vector<Elem>(so));
  sum.right.assign(so, std::vector<Elem>(ab->order()));
  for (std::size_t s = 0; s < so; ++s) {
    const std::size_t sm = s % mo, sn = s / mo;
    for (std::size_t t = 0; t < so; ++t)
      sum.add[s][t] = static_cast<Elem>(m.add[sm][t % mo] + mo * n.add[sn][t / mo]);
    for (std::size_t p = 0; p < ab->order(); ++p) {
      const std::size_t pa = p % ao, pb = p / ao;
      sum.left[p][s] = static_cast<Elem>(m.left[pa][sm] + mo * n.left[pb][sn]);
      sum.right[s][p] = static_cast<Elem>(m.right[sm][pb] + mo * n.right[sn][pa]);
    }
  }
  auto label = [a, b, m, n, ao, mo, so](Elem x) {
    const std::size_t p = x / so, s = x % so;
    return "(" + atom(a->label(static_cast<Elem>(p % ao))) + " " +
           atom(module_label(m, static_cast<Elem>(s % mo))) + ";" +
           atom(module_label(n, static_cast<Elem>(s / mo))) + " " +
           atom(b->label(static_cast<Elem>(p / ao))) + ")";
  };
  return split_extension(ab, sum, label, std::move(spec), opts);
}

// ---- spec dispatch ----------------------------------------------------------

Elem resolve_ref(const Ring& r, const ElementRef& ref, const std::string& path) {
  if (auto e = r.resolve(ref)) return *e;
  const std::string shown = std::visit(
      Overloaded{[](Elem e) { return "#" + std::to_string(e); },
                 [](const std::string& s) { return "'" + s + "'"; }},
      ref.value);
  throw SpecError(path, "element " + shown + " does not exist in " + display_name(r.spec()));
}

ElementSet resolve_refs(const Ring& r, const std::vector<ElementRef>& refs,
                        const std::string& path) {
  ElementSet s(r.order());
  for (std::size_t i = 0; i < refs.size(); ++i)
    s.insert(resolve_ref(r, refs[i], path + "[" + std::to_string(i) + "]"));
  return s;
}

RingHandle build_at(const SpecPtr& s, const std::string& path, const BuildOptions& opts) {
  auto child = [&](const SpecPtr& c, const std::string& kind, const std::string& field) {
    return build_at(c, path + "." + kind + "." + field, opts);
  };
  return std::visit(
      Overloaded{
          [&](const spec::Zn& z) { return zn_impl(z.n, s, opts); },
          [&](const spec::Gf& g) {
            if (!is_prime(g.p)) throw SpecError(path + ".gf.p", "p must be prime");
            return gf_impl(g.p, g.k, s, opts);
          },
          [&](const spec::Product& p) {
            std::vector<RingHandle> fs;
            for (std::size_t i = 0; i < p.factors.size(); ++i)
              fs.push_back(build_at(p.factors[i], path + ".product[" + std::to_string(i) + "]", opts));
            return product_impl(std::move(fs), s, opts);
          },
          [&](const spec::Matrix& m) {
            return matrix_like(m.n, child(m.base, "matrix", "base"), false, s, opts);
          },
          [&](const spec::Triangular& t) {
            return matrix_like(t.n, child(t.base, "triangular", "base"), true, s, opts);
          },
          [&](const spec::Quotient& q) {
            auto base = child(q.base, "quotient", "base");
            const auto ideal =
                q.radical ? jacobson_radical(*base)
                          : ideal_generated(*base, resolve_refs(*base, q.generators,
                                                                path + ".quotient.generators"));
            return quotient_impl(base, ideal, s, opts).ring;
          },
          [&](const spec::Corner& c) {
            auto base = child(c.base, "corner", "base");
            const Elem e = resolve_ref(*base, c.idempotent, path + ".corner.idempotent");
            if (base->mul(e, e) != e)
              throw SpecError(path + ".corner.idempotent", "element is not idempotent");
            return corner_impl(base, e, s, opts).ring;
          },
          [&](const spec::Subring& sr) {
            auto base = child(sr.base, "subring", "base");
            return subring_impl(base, resolve_refs(*base, sr.generators, path + ".subring.generators"),
                                s, opts)
                .ring;
          },
          [&](const spec::GroupRing& g) {
            return group_ring_impl(child(g.base, "group_ring", "base"), g.group, s, opts).ring;
          },
          [&](const spec::TrivialExtension& t) {
            auto base = child(t.base, "trivial_extension", "base");
            if (!t.v) return split_extension(base, regular_bimodule(*base), {}, s, opts);
            ModuleTables v = *t.v;
            v.mul.clear();
            require(validate_bimodule(*base, *base, v), "trivial extension");
            return split_extension(base, v, {}, s, opts);
          },
          [&](const spec::IdealExtension& e) {
            auto base = child(e.base, "ideal_extension", "base");
            require(validate_ideal_module(*base, e.m), "ideal extension");
            return split_extension(base, e.m, {}, s, opts);
          },
          [&](const spec::FormalTriangular& f) {
            return formal_triangular_impl(child(f.a, "formal_triangular", "a"),
                                          child(f.b, "formal_triangular", "b"), f.m, s, opts);
          },
          [&](const spec::TrivialMorita& t) {
            return morita_impl(child(t.a, "trivial_morita", "a"), child(t.b, "trivial_morita", "b"),
                               t.m, t.n, s, opts);
          },
          [&](const spec::TruncPoly& t) {
            auto base = child(t.base, "trunc_poly", "base");
            return skew_impl(base, endo_map_impl(*base, {endo::Identity{}}), t.n, s, opts);
          },
          [&](const spec::SkewTruncPoly& t) {
            auto base = child(t.base, "skew_trunc_poly", "base");
            return skew_impl(base, endo_map_impl(*base, t.alpha), t.n, s, opts);
          },
          [&](const spec::Opposite& o) {
            return opposite_impl(child(o.base, "opposite", "base"), s, opts);
          },
          [&](const spec::Tables& t) { return table_ring(t.add, t.mul, t.labels, opts); },
      },
      s->node);
}

}  // namespace

// ---- public entry points ------------------------------------------------------

RingHandle build(const SpecPtr& spec, const BuildOptions& opts) {
  if (!spec) throw SpecError("$", "empty spec");
  return build_at(spec, "$", opts);
}

RingHandle zn_ring(std::size_t n, const BuildOptions& opts) { return zn_impl(n, zn(n), opts); }

RingHandle gf_ring(std::size_t p, std::size_t k, const BuildOptions& opts) {
  return gf_impl(p, k, gf(p, k), opts);
}

RingHandle product_ring(const std::vector<RingHandle>& factors, const BuildOptions& opts) {
  std::vector<SpecPtr> specs;
  for (const auto& f : factors) specs.push_back(f->spec_ptr());
  return product_impl(factors, product(std::move(specs)), opts);
}

RingHandle matrix_ring(std::size_t n, const RingHandle& base, const BuildOptions& opts) {
  return matrix_like(n, base, false, matrix(n, base->spec_ptr()), opts);
}

RingHandle triangular_ring(std::size_t n, const RingHandle& base, const BuildOptions& opts) {
  return matrix_like(n, base, true, triangular(n, base->spec_ptr()), opts);
}

QuotientResult quotient_ring(const RingHandle& base, const ElementSet& generators,
                             const BuildOptions& opts) {
  return quotient_impl(base, ideal_generated(*base, generators),
                       make_spec(spec::Quotient{base->spec_ptr(), id_refs(generators), false}),
                       opts);
}

QuotientResult radical_quotient_ring(const RingHandle& base, const BuildOptions& opts) {
  return radical_quotient_ring(base, jacobson_radical(*base), opts);
}

QuotientResult radical_quotient_ring(const RingHandle& base, const ElementSet& radical,
                                     const BuildOptions& opts) {
  return quotient_impl(base, radical, radical_quotient(base->spec_ptr()), opts);
}

SubringResult corner_ring(const RingHandle& base, Elem e, const BuildOptions& opts) {
  return corner_impl(base, e, make_spec(spec::Corner{base->spec_ptr(), ElementRef{e}}), opts);
}

SubringResult subring(const RingHandle& base, const ElementSet& generators,
                      const BuildOptions& opts) {
  return subring_impl(base, generators,
                      make_spec(spec::Subring{base->spec_ptr(), id_refs(generators)}), opts);
}

GroupRingResult group_ring_of(const RingHandle& base, const GroupSpec& group,
                              const BuildOptions& opts) {
  return group_ring_impl(base, group, group_ring(base->spec_ptr(), group), opts);
}

RingHandle trivial_extension_ring(const RingHandle& base, const std::optional<ModuleTables>& v,
                                  const BuildOptions& opts) {
  if (!v) return split_extension(base, regular_bimodule(*base), {}, trivial_extension(base->spec_ptr()), opts);
  ModuleTables m = *v;
  m.mul.clear();
  require(validate_bimodule(*base, *base, m), "trivial extension");
  return split_extension(base, m, {}, make_spec(spec::TrivialExtension{base->spec_ptr(), m}),
                         opts);
}

RingHandle ideal_extension_ring(const RingHandle& base, const ModuleTables& m,
                                const BuildOptions& opts) {
  require(validate_ideal_module(*base, m), "ideal extension");
  return split_extension(base, m, {}, make_spec(spec::IdealExtension{base->spec_ptr(), m}), opts);
}

RingHandle formal_triangular_ring(const RingHandle& a, const RingHandle& b, const ModuleTables& m,
                                  const BuildOptions& opts) {
  return formal_triangular_impl(
      a, b, m, make_spec(spec::FormalTriangular{a->spec_ptr(), b->spec_ptr(), m}), opts);
}

RingHandle trivial_morita_ring(const RingHandle& a, const RingHandle& b, const ModuleTables& m,
                               const ModuleTables& n, const BuildOptions& opts) {
  return morita_impl(a, b, m, n,
                     make_spec(spec::TrivialMorita{a->spec_ptr(), b->spec_ptr(), m, n}), opts);
}

RingHandle trunc_poly_ring(const RingHandle& base, std::size_t n, const BuildOptions& opts) {
  return skew_impl(base, endo_map_impl(*base, {endo::Identity{}}), n,
                   trunc_poly(base->spec_ptr(), n), opts);
}

RingHandle skew_trunc_poly_ring(const RingHandle& base, const Endomorphism& alpha, std::size_t n,
                                const BuildOptions& opts) {
  return skew_impl(base, endo_map_impl(*base, alpha), n,
                   make_spec(spec::SkewTruncPoly{base->spec_ptr(), alpha, n}), opts);
}

RingHandle opposite_ring(const RingHandle& base, const BuildOptions& opts) {
  return opposite_impl(base, opposite(base->spec_ptr()), opts);
}

std::vector<Elem> endomorphism_map(const Ring& base, const Endomorphism& alpha) {
  return endo_map_impl(base, alpha);
}

// ---- module helpers -------------------------------------------------------------

ModuleTables regular_bimodule(const Ring& r) {
  ModuleTables m;
  const std::size_t n = r.order();
  m.add.assign(n, std::vector<Elem>(n));
  m.left.assign(n, std::vector<Elem>(n));
  m.right.assign(n, std::vector<Elem>(n));
  for (Elem a : r.elements())
    for (Elem b : r.elements()) {
      m.add[a][b] = r.add(a, b);
      m.left[a][b] = r.mul(a, b);
      m.right[a][b] = r.mul(a, b);
    }
  m.labels = r.labels();
  return m;
}

ModuleTables zero_module(std::size_t left_order, std::size_t right_order) {
  ModuleTables m;
  m.add = {{0}};
  m.left.assign(left_order, std::vector<Elem>{0});
  m.right = {std::vector<Elem>(right_order, 0)};
  return m;
}

ModuleTables integer_bimodule(std::size_t k, const Ring& a, const Ring& b) {
  if (k == 0) throw ConstructionError("integer module: modulus must be positive");
  // Each ring element must be an integer multiple c·1; a acts as c.
  auto multiples = [k](const Ring& r) {
    std::vector<std::size_t> coeff(r.order(), SIZE_MAX);
    Elem x = r.zero();
    for (std::size_t c = 0; coeff[x] == SIZE_MAX; ++c) {
      coeff[x] = c;
      x = r.add(x, r.one());
    }
    const std::size_t characteristic =
        static_cast<std::size_t>(std::count_if(coeff.begin(), coeff.end(),
                                               [](std::size_t c) { return c != SIZE_MAX; }));
    if (characteristic != r.order())
      throw ConstructionError("integer module: " + display_name(r.spec()) +
                              " is not generated by its identity");
    if (characteristic % k != 0)
      throw ConstructionError("integer module: Z" + std::to_string(k) +
                              " is not a module over " + display_name(r.spec()));
    return coeff;
  };
  const auto ca = multiples(a), cb = multiples(b);
  ModuleTables m;
  m.add.assign(k, std::vector<Elem>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) m.add[x][y] = static_cast<Elem>((x + y) % k);
  m.left.assign(a.order(), std::vector<Elem>(k));
  for (Elem r : a.elements())
    for (std::size_t x = 0; x < k; ++x) m.left[r][x] = static_cast<Elem>(ca[r] * x % k);
  m.right.assign(k, std::vector<Elem>(b.order()));
  for (std::size_t x = 0; x < k; ++x)
    for (Elem r : b.elements()) m.right[x][r] = static_cast<Elem>(cb[r] * x % k);
  return m;
}

ModuleTables ideal_module(const Ring& host, const ElementSet& ideal, const Ring& acting,
                          const std::vector<Elem>& lift) {
  const auto members = ideal.members();
  std::vector<Elem> index(host.order(), kNoElem);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Elem>(i);
  auto inside = [&](Elem x) {
    if (index[x] == kNoElem)
      throw ConstructionError("ideal module: set is not closed under the operations");
    return index[x];
  };
  const std::size_t n = members.size();
  ModuleTables m;
  m.add.assign(n, std::vector<Elem>(n));
  m.mul.assign(n, std::vector<Elem>(n));
  m.left.assign(acting.order(), std::vector<Elem>(n));
  m.right.assign(n, std::vector<Elem>(acting.order()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.add[i][j] = inside(host.add(members[i], members[j]));
      m.mul[i][j] = inside(host.mul(members[i], members[j]));
    }
    for (Elem r : acting.elements()) {
      m.left[r][i] = inside(host.mul(lift[r], members[i]));
      m.right[i][r] = inside(host.mul(members[i], lift[r]));
    }
    m.labels.push_back(host.label(members[i]));
  }
  return m;
}

ModuleCheck validate_bimodule(const Ring& a, const Ring& b, const ModuleTables& m) {
  const std::size_t n = m.order();
  auto bad = [](std::string msg) { return ModuleCheck{false, std::move(msg)}; };
  if (n == 0) return bad("empty module");
  if (!square_table(m.add, n, n, n)) return bad("addition table is not a square table on M");
  if (!square_table(m.left, a.order(), n, n)) return bad("left action table has the wrong shape");
  if (!square_table(m.right, n, b.order(), n)) return bad("right action table has the wrong shape");
  if (!m.mul.empty() && !square_table(m.mul, n, n, n))
    return bad("multiplication table has the wrong shape");
  if (!m.labels.empty() && m.labels.size() != n) return bad("label count differs from |M|");
  const Elem z = module_zero(m);
  if (z == kNoElem) return bad("addition has no identity");
  for (Elem x = 0; x < n; ++x) {
    bool inverse = false;
    for (Elem y = 0; y < n; ++y) {
      inverse = inverse || m.add[x][y] == z;
      if (m.add[x][y] != m.add[y][x]) return bad("addition is not commutative" + at({x, y}));
      for (Elem w = 0; w < n; ++w)
        if (m.add[m.add[x][y]][w] != m.add[x][m.add[y][w]])
          return bad("addition is not associative" + at({x, y, w}));
    }
    if (!inverse) return bad("element has no additive inverse" + at({x}));
  }
  for (Elem x = 0; x < n; ++x) {
    if (m.left[a.one()][x] != x) return bad("1·m != m" + at({x}));
    if (m.right[x][b.one()] != x) return bad("m·1 != m" + at({x}));
    for (Elem y = 0; y < n; ++y) {
      for (Elem r : a.elements())
        if (m.left[r][m.add[x][y]] != m.add[m.left[r][x]][m.left[r][y]])
          return bad("r(m + n) != rm + rn" + at({r, x, y}));
      for (Elem s : b.elements())
        if (m.right[m.add[x][y]][s] != m.add[m.right[x][s]][m.right[y][s]])
          return bad("(m + n)s != ms + ns" + at({x, y, s}));
    }
    for (Elem r : a.elements())
      for (Elem r2 : a.elements()) {
        if (m.left[a.add(r, r2)][x] != m.add[m.left[r][x]][m.left[r2][x]])
          return bad("(r + r')m != rm + r'm" + at({r, r2, x}));
        if (m.left[a.mul(r, r2)][x] != m.left[r][m.left[r2][x]])
          return bad("(rr')m != r(r'm)" + at({r, r2, x}));
      }
    for (Elem s : b.elements())
      for (Elem s2 : b.elements()) {
        if (m.right[x][b.add(s, s2)] != m.add[m.right[x][s]][m.right[x][s2]])
          return bad("m(s + s') != ms + ms'" + at({x, s, s2}));
        if (m.right[x][b.mul(s, s2)] != m.right[m.right[x][s]][s2])
          return bad("m(ss') != (ms)s'" + at({x, s, s2}));
      }
    for (Elem r : a.elements())
      for (Elem s : b.elements())
        if (m.right[m.left[r][x]][s] != m.left[r][m.right[x][s]])
          return bad("(rm)s != r(ms)" + at({r, x, s}));
  }
  return {};
}

ModuleCheck validate_ideal_module(const Ring& r, const ModuleTables& m) {
  if (auto check = validate_bimodule(r, r, m); !check.ok) return check;
  if (m.mul.empty()) return {};
  const std::size_t n = m.order();
  auto bad = [](std::string msg) { return ModuleCheck{false, std::move(msg)}; };
  const auto& mul = m.mul;
  const auto& add = m.add;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (Elem w = 0; w < n; ++w) {
        if (mul[mul[x][y]][w] != mul[x][mul[y][w]])
          return bad("multiplication on M is not associative" + at({x, y, w}));
        if (mul[x][add[y][w]] != add[mul[x][y]][mul[x][w]])
          return bad("m(n + p) != mn + mp" + at({x, y, w}));
        if (mul[add[x][y]][w] != add[mul[x][w]][mul[y][w]])
          return bad("(m + n)p != mp + np" + at({x, y, w}));
      }
      for (Elem s : r.elements()) {
        if (mul[m.left[s][x]][y] != m.left[s][mul[x][y]])
          return bad("(rm)n != r(mn)" + at({s, x, y}));
        if (mul[m.right[x][s]][y] != mul[x][m.left[s][y]])
          return bad("(mr)n != m(rn)" + at({x, s, y}));
        if (m.right[mul[x][y]][s] != mul[x][m.right[y][s]])
          return bad("(mn)r != m(nr)" + at({x, y, s}));
      }
    }
  return {};
}

IdealExtensionHypotheses ideal_extension_hypotheses(const Ring& r, const ModuleTables& m) {
  IdealExtensionHypotheses h;
  const std::size_t n = m.order();
  const Elem z = module_zero(m);
  const auto idem = idempotents(r);
  idem.for_each([&](Elem e) {
    for (Elem x = 0; x < n && h.idempotents_commute; ++x)
      if (m.left[e][x] != m.right[x][e]) {
        h.idempotents_commute = false;
        h.detail = "em != me at e=" + r.label(e) + ", m=" + module_label(m, x);
      }
  });
  for (Elem x = 0; x < n && h.quasi_regular; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) {
      const Elem s = m.add[x][y];
      found = (m.mul.empty() ? s : m.add[s][m.mul[x][y]]) == z;
    }
    if (!found) {
      h.quasi_regular = false;
      h.detail += (h.detail.empty() ? "" : "; ") + std::string("no quasi-inverse for m=") +
                  module_label(m, x);
    }
  }
  return h;
}

bool idempotents_commute_with(const Ring& a, const ModuleTables& v) {
  ModuleTables plain = v;
  plain.mul.clear();
  return ideal_extension_hypotheses(a, plain).idempotents_commute;
}

}  // namespace ringlab
