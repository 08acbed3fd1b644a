#include "ringlab/catalog.hpp"

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

ModuleTables even_ideal_of_z8() {
  auto z8 = zn_ring(8);
  auto z4 = zn_ring(4);
  return ideal_module(*z8, ElementSet(8, {0, 2, 4, 6}), *z4, {0, 1, 2, 3});
}

ModuleTables radical_of_z2_cubic() {
  auto host = trunc_poly_ring(zn_ring(2), 3);
  // ids are c0 + 2c1 + 4c2, so x = 2 and x^2 = 4
  return ideal_module(*host, ElementSet(8, {0, 2, 4, 6}), *zn_ring(2), {0, 1});
}

ModuleTables z2_over_itself() {
  auto z2 = zn_ring(2);
  return ideal_module(*z2, ElementSet::full(2), *z2, {0, 1});
}

std::vector<NamedSpec> default_catalog_specs() {
  const auto z2 = zn(2);
  const auto z4 = zn(4);
  const auto f4 = gf(2, 2);
  const auto t2z2 = triangular(2, z2);
  const auto t2z4 = triangular(2, z4);
  const auto q8 = GroupSpec{group_spec::Quaternion8{}};

  auto z2_over = [&](std::size_t k, const SpecPtr& a, const SpecPtr& b) {
    return integer_bimodule(k, *build(a), *build(b));
  };

  std::vector<NamedSpec> out;
  auto add = [&](SpecPtr s, std::string name = {}) {
    if (name.empty()) name = display_name(*s);
    out.push_back({std::move(name), std::move(s)});
  };
  for (SpecPtr s : {
      z2, zn(3), z4, zn(6), zn(8), zn(9), zn(16),
      f4, gf(2, 3),
      product({z2, z2}), product({z2, z4}),
      t2z2, triangular(3, z2), t2z4, triangular(2, zn(16)),
      matrix(2, z2),
      trunc_poly(z2, 2), trunc_poly(z2, 3), trunc_poly(z4, 2),
      trivial_extension(z2), trivial_extension(z4),
      make_spec(spec::SkewTruncPoly{f4, Endomorphism{endo::Frobenius{2}}, 2}),
      group_ring(z2, cyclic_group(2)), group_ring(z2, cyclic_group(3)),
      group_ring(z2, cyclic_group(4)), group_ring(z2, GroupSpec{group_spec::KleinFour{}}),
      group_ring(z4, cyclic_group(2)), group_ring(zn(3), cyclic_group(2)),
      group_ring(z2, GroupSpec{group_spec::Symmetric3{}}), group_ring(z2, q8),
      radical_quotient(t2z2), radical_quotient(t2z4), radical_quotient(zn(8)),
      opposite(t2z2)})
    add(s);
  add(make_spec(spec::TrivialExtension{z4, z2_over(2, z4, z4)}), "T(Z4,Z2)");
  add(make_spec(spec::FormalTriangular{z2, z2, z2_over(2, z2, z2)}), "FT(Z2,Z2,Z2)");
  add(make_spec(spec::FormalTriangular{z4, z2, z2_over(2, z4, z2)}), "FT(Z4,Z2,Z2)");
  add(make_spec(spec::TrivialMorita{z2, z2, z2_over(2, z2, z2), z2_over(2, z2, z2)}),
      "Morita(Z2,Z2,Z2,Z2)");
  add(make_spec(spec::IdealExtension{z4, even_ideal_of_z8()}), "I(Z4,2Z8)");
  add(make_spec(spec::IdealExtension{z2, radical_of_z2_cubic()}), "I(Z2,J(Z2[x]/x^3))");
  add(make_spec(spec::IdealExtension{z2, z2_over_itself()}), "I(Z2,Z2)");
  return out;
}

Catalog build_catalog(const std::vector<NamedSpec>& specs, const BuildOptions& opts) {
  Catalog c;
  c.entries.reserve(specs.size());
  for (const auto& s : specs) c.entries.push_back({s.name, s.spec, build(s.spec, opts)});
  return c;
}

Catalog default_catalog(const BuildOptions& opts) {
  return build_catalog(default_catalog_specs(), opts);
}

std::vector<NamedSpec> catalog_from_json(const Json& doc) {
  if (!doc.is_array()) throw SpecError("$", "catalog manifest must be an array");
  std::vector<NamedSpec> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "$[" + std::to_string(i) + "]";
    const Json& item = doc[i];
    if (!item.is_object()) throw SpecError(path, "expected an object with a spec");
    for (const auto& [key, value] : item.items())
      if (key != "name" && key != "spec") throw SpecError(path + "." + key, "unknown field");
    if (!item.contains("spec")) throw SpecError(path + ".spec", "missing field");
    auto spec = spec_from_json(item.at("spec"), path + ".spec");
    std::string name;
    if (item.contains("name")) {
      if (!item.at("name").is_string()) throw SpecError(path + ".name", "expected a string");
      name = item.at("name").get<std::string>();
    } else {
      name = display_name(*spec);
    }
    out.push_back({std::move(name), std::move(spec)});
  }
  return out;
}

Json catalog_to_json(const std::vector<NamedSpec>& specs) {
  Json arr = Json::array();
  for (const auto& s : specs) arr.push_back(Json{{"name", s.name}, {"spec", to_json(*s.spec)}});
  return arr;
}

}  // namespace ringlab
