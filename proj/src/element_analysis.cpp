#include "ringlab/element_analysis.hpp"

namespace ringlab {

std::vector<Decomposition> clean_decompositions(const Ring& r, const InvariantCache& inv, Elem a) {
  std::vector<Decomposition> out;
  inv.idempotents.for_each([&](Elem e) {
    const Elem u = r.sub(a, e);
    if (inv.units.contains(u)) out.push_back({e, u, r.mul(e, u) == r.mul(u, e)});
  });
  return out;
}

std::vector<Decomposition> strongly_clean_decompositions(const Ring& r, const InvariantCache& inv,
                                                         Elem a) {
  auto all = clean_decompositions(r, inv, a);
  std::erase_if(all, [](const Decomposition& d) { return !d.commuting; });
  return all;
}

namespace {

bool usc_count_ok(std::size_t n, UscReading reading) {
  return reading == UscReading::ExactlyOne ? n == 1 : n <= 1;
}

}  // namespace

ElementProfile profile_element(const Ring& r, const InvariantCache& inv, Elem a,
                               UscReading reading) {
  ElementProfile p;
  p.element = a;
  p.clean = clean_decompositions(r, inv, a);
  for (const auto& d : p.clean)
    if (d.commuting) p.strongly_clean.push_back(d);
  p.is_clean = !p.clean.empty();
  p.is_strongly_clean = !p.strongly_clean.empty();
  p.is_uniquely_clean = p.clean.size() == 1;
  p.is_usc = usc_count_ok(p.strongly_clean.size(), reading);
  return p;
}

ElementVerdict is_usc_element(const Ring& r, const InvariantCache& inv, Elem a,
                              UscReading reading) {
  auto sc = strongly_clean_decompositions(r, inv, a);
  return {usc_count_ok(sc.size(), reading), std::move(sc)};
}

ElementVerdict is_uniquely_clean_element(const Ring& r, const InvariantCache& inv, Elem a) {
  auto c = clean_decompositions(r, inv, a);
  return {c.size() == 1, std::move(c)};
}

Json to_json(const Ring& r, const Decomposition& d) {
  return Json{{"idempotent", r.label(d.idempotent)},
              {"unit", r.label(d.unit)},
              {"commuting", d.commuting}};
}

Json to_json(const Ring& r, const ElementProfile& p) {
  Json clean = Json::array();
  for (const auto& d : p.clean) clean.push_back(to_json(r, d));
  return Json{{"element", r.label(p.element)},
              {"id", p.element},
              {"is_clean", p.is_clean},
              {"is_strongly_clean", p.is_strongly_clean},
              {"is_uniquely_clean", p.is_uniquely_clean},
              {"is_usc", p.is_usc},
              {"decompositions", clean}};
}

}  // namespace ringlab
