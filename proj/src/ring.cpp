#include "ringlab/ring.hpp"

#include "ringlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_set>

namespace ringlab {

namespace detail {

LazyTable::LazyTable(std::size_t n, std::function<Elem(Elem, Elem)> fn)
    : n_(n),
      fn_(std::move(fn)),
      flags_(std::make_unique<std::once_flag[]>(n)),
      rows_(std::make_unique<std::unique_ptr<Elem[]>[]>(n)) {}

void LazyTable::fill(Elem a) const {
  auto row = std::make_unique<Elem[]>(n_);
  for (std::size_t b = 0; b < n_; ++b) {
    const Elem v = fn_(a, static_cast<Elem>(b));
    if (v >= n_) throw ConstructionError("operation result out of range");
    row[b] = v;
  }
  rows_[a] = std::move(row);
}

}  // namespace detail

namespace {

std::string compact(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::uint16_t> materialize(std::size_t n,
                                       const std::function<Elem(Elem, Elem)>& fn,
                                       const char* what) {
  std::vector<std::uint16_t> tab(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem v = fn(static_cast<Elem>(a), static_cast<Elem>(b));
      if (v >= n)
        throw ConstructionError(std::string(what) + " is not closed: (" +
                                std::to_string(a) + ", " + std::to_string(b) + ") -> " +
                                std::to_string(v));
      tab[a * n + b] = static_cast<std::uint16_t>(v);
    }
  return tab;
}

}  // namespace

std::string ValidationReport::describe() const {
  if (ok) return "pass";
  std::string out = axiom + " fails at (";
  bool first = true;
  for (Elem w : witness) {
    if (w == kNoElem) continue;
    out += (first ? "" : ", ") + std::to_string(w);
    first = false;
  }
  return out + ")";
}

RingHandle Ring::create(Definition def, const BuildOptions& opts) {
  const std::size_t n = def.order;
  if (n == 0) throw ConstructionError("a ring needs at least one element");
  if (n > opts.max_order) throw SizeExceeded("ring construction", n, opts.max_order);
  if (def.zero >= n || def.one >= n) throw ConstructionError("zero/one out of range");

  std::shared_ptr<Ring> r(new Ring());
  r->n_ = n;
  r->zero_ = def.zero;
  r->one_ = def.one;
  r->spec_ = def.spec;

  const std::size_t threshold = std::min<std::size_t>(opts.materialize_threshold, 65536);
  if (n <= threshold) {
    r->add_tab_ = materialize(n, def.add, "addition");
    r->mul_tab_ = materialize(n, def.mul, "multiplication");
  } else {
    r->lazy_add_ = std::make_unique<detail::LazyTable>(n, def.add);
    r->lazy_mul_ = std::make_unique<detail::LazyTable>(n, def.mul);
  }

  r->neg_.resize(n, kNoElem);
  if (def.neg) {
    for (Elem a = 0; a < n; ++a) r->neg_[a] = def.neg(a);
  } else {
    for (Elem a = 0; a < n; ++a) {
      if (r->neg_[a] != kNoElem) continue;
      for (Elem b = 0; b < n; ++b)
        if (r->add(a, b) == def.zero) {
          r->neg_[a] = b;
          r->neg_[b] = a;
          break;
        }
      if (r->neg_[a] == kNoElem)
        throw ConstructionError("element " + std::to_string(a) + " has no additive inverse");
    }
  }

  r->labels_.reserve(n);
  for (Elem a = 0; a < n; ++a)
    r->labels_.push_back(def.label ? def.label(a) : std::to_string(a));
  std::unordered_set<std::string> ambiguous;
  for (Elem a = 0; a < n; ++a) {
    r->label_index_.emplace(r->labels_[a], a);
    auto key = compact(r->labels_[a]);
    if (!r->compact_index_.emplace(key, a).second) ambiguous.insert(key);
  }
  for (const auto& key : ambiguous) r->compact_index_.erase(key);

  if (opts.validate) {
    auto report = validate_ring(*r, opts.validation_limit);
    if (!report.ok) {
      const std::string name = def.spec ? display_name(*def.spec) : std::string("ring");
      throw ConstructionError(name + ": " + report.describe());
    }
  }
  return r;
}

Elem Ring::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem Ring::integer(std::size_t k) const {
  Elem result = zero_;
  Elem base = one_;
  while (k) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> Ring::find_label(std::string_view text) const {
  if (auto it = label_index_.find(std::string(text)); it != label_index_.end())
    return it->second;
  if (auto it = compact_index_.find(compact(text)); it != compact_index_.end())
    return it->second;
  return std::nullopt;
}

std::optional<Elem> Ring::resolve(const ElementRef& ref) const {
  if (const auto* id = std::get_if<Elem>(&ref.value)) {
    if (*id < n_) return *id;
    return std::nullopt;
  }
  return find_label(std::get<std::string>(ref.value));
}

namespace {

// Checks every law on one triple; returns the violated axiom or nullptr.
const char* triple_violation(const Ring& r, Elem a, Elem b, Elem c) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
  return nullptr;
}

ValidationReport check_unary_binary(const Ring& r) {
  const auto n = static_cast<Elem>(r.order());
  if (n > 1 && r.zero() == r.one()) return {false, "zero distinct from one", {r.zero(), kNoElem, kNoElem}};
  for (Elem a = 0; a < n; ++a) {
    if (r.add(r.zero(), a) != a || r.add(a, r.zero()) != a)
      return {false, "additive identity", {a, kNoElem, kNoElem}};
    if (r.neg(a) >= n || r.add(a, r.neg(a)) != r.zero())
      return {false, "additive inverse", {a, kNoElem, kNoElem}};
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a)
      return {false, "multiplicative identity", {a, kNoElem, kNoElem}};
  }
  return {};
}

}  // namespace

ValidationReport validate_axioms(const Ring& r, std::size_t limit, bool force) {
  if (r.order() > limit && !force) throw SizeExceeded("axiom validation", r.order(), limit);
  if (auto rep = check_unary_binary(r); !rep.ok) return rep;
  const auto n = static_cast<Elem>(r.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) return {false, "additive commutativity", {a, b, kNoElem}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (const char* ax = triple_violation(r, a, b, c)) return {false, ax, {a, b, c}};
  return {};
}

ValidationReport validate_ring(const Ring& r, std::size_t limit) {
  if (r.order() <= limit) return validate_axioms(r, limit);
  if (auto rep = check_unary_binary(r); !rep.ok) return rep;
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.order() - 1));
  constexpr int kSamples = 200000;
  for (int i = 0; i < kSamples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (r.add(a, b) != r.add(b, a)) return {false, "additive commutativity", {a, b, kNoElem}};
    if (const char* ax = triple_violation(r, a, b, c)) return {false, ax, {a, b, c}};
  }
  return {};
}

RingHandle table_ring(const Table& add, const Table& mul, std::vector<std::string> labels,
                      const BuildOptions& opts) {
  const std::size_t n = add.size();
  if (n == 0) throw ConstructionError("empty tables");
  if (mul.size() != n) throw ConstructionError("dimension mismatch between add and mul tables");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw ConstructionError("dimension mismatch in row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] >= n || mul[i][j] >= n)
        throw ConstructionError("table entry out of range at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  }
  if (!labels.empty() && labels.size() != n)
    throw ConstructionError("dimension mismatch between tables and labels");

  auto is_left_right_identity = [n](const Table& t, Elem e) {
    for (Elem a = 0; a < n; ++a)
      if (t[e][a] != a || t[a][e] != a) return false;
    return true;
  };

  Elem zero = kNoElem;
  for (Elem e = 0; e < n && zero == kNoElem; ++e)
    if (is_left_right_identity(add, e)) zero = e;
  if (zero == kNoElem) throw ConstructionError("non-group addition: no additive identity");
  for (Elem a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Elem b = 0; b < n && !has_inverse; ++b) has_inverse = add[a][b] == zero;
    if (!has_inverse)
      throw ConstructionError("non-group addition: " + std::to_string(a) + " has no inverse");
    for (Elem b = 0; b < n; ++b)
      if (add[a][b] != add[b][a])
        throw ConstructionError("non-group addition: not commutative at (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  Elem one = kNoElem;
  for (Elem e = 0; e < n && one == kNoElem; ++e)
    if (is_left_right_identity(mul, e)) one = e;
  if (one == kNoElem) throw ConstructionError("missing multiplicative identity");

  auto spec = make_spec(spec::Tables{add, mul, labels});
  Ring::Definition def;
  def.order = n;
  def.zero = zero;
  def.one = one;
  def.add = [&add](Elem a, Elem b) { return add[a][b]; };
  def.mul = [&mul](Elem a, Elem b) { return mul[a][b]; };
  if (!labels.empty()) def.label = [labels](Elem a) { return labels[a]; };
  def.spec = spec;
  // Tables are copied into the ring when materialized; for lazy rings the
  // spec keeps them alive.
  if (n > std::min<std::size_t>(opts.materialize_threshold, 65536)) {
    const auto& tabs = std::get<spec::Tables>(spec->node);
    def.add = [&tabs](Elem a, Elem b) { return tabs.add[a][b]; };
    def.mul = [&tabs](Elem a, Elem b) { return tabs.mul[a][b]; };
  }
  return Ring::create(std::move(def), opts);
}

}  // namespace ringlab
