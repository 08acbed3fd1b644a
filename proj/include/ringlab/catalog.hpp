#pragma once

#include "ringlab/ring.hpp"
#include "ringlab/ring_spec.hpp"

#include <string>
#include <vector>

namespace ringlab {

struct NamedSpec {
  std::string name;
  SpecPtr spec;
};

struct CatalogEntry {
  std::string name;
  SpecPtr spec;
  RingHandle ring;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

/// The built-in roster, orders 2 to 4096.
std::vector<NamedSpec> default_catalog_specs();

/// Builds and validates every entry, in order.
Catalog build_catalog(const std::vector<NamedSpec>& specs, const BuildOptions& opts = {});
Catalog default_catalog(const BuildOptions& opts = {});

/// Manifest format: [{"name": "...", "spec": {...}}, ...]. A missing name
/// falls back to the spec's display name. Throws SpecError with a path such
/// as "$[3].spec.base".
std::vector<NamedSpec> catalog_from_json(const Json& doc);
Json catalog_to_json(const std::vector<NamedSpec>& specs);

// Sample modules used by the default roster.

/// 2Z8 = {0,2,4,6} as a nonunital ring acted on by Z4.
ModuleTables even_ideal_of_z8();
/// J(Z2[x]/x^3) = {0, x, x^2, x + x^2} acted on by Z2.
ModuleTables radical_of_z2_cubic();
/// Z2 acting on itself with its own multiplication.
ModuleTables z2_over_itself();

}  // namespace ringlab
