#pragma once

#include "ringlab/element_set.hpp"

#include <json.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ringlab {

using Json = nlohmann::ordered_json;
using Table = std::vector<std::vector<Elem>>;

/// An element named either by dense id or by display label.
struct ElementRef {
  std::variant<Elem, std::string> value;
};

/// Additive group M (by tables) with a left action of A and a right action
/// of B; `mul` is an optional associative multiplication on M (empty means
/// M·M = 0). Used for bimodules and for the nonunital rings of ideal
/// extensions.
struct ModuleTables {
  Table add;
  Table mul;
  Table left;   // left[a][m]  = a·m
  Table right;  // right[m][b] = m·b
  std::vector<std::string> labels;

  std::size_t order() const { return add.size(); }
};

namespace group_spec {
struct Cyclic { std::size_t n; };
struct KleinFour {};
struct Dihedral { std::size_t n; };  // order 2n
struct Symmetric3 {};
struct Quaternion8 {};
struct Explicit {
  Table table;
  Elem identity = 0;
};
}  // namespace group_spec

struct GroupSpec {
  std::variant<group_spec::Cyclic, group_spec::KleinFour, group_spec::Dihedral,
               group_spec::Symmetric3, group_spec::Quaternion8,
               group_spec::Explicit>
      node;
};

namespace endo {
struct Identity {};
struct Frobenius { std::size_t p; };
struct Explicit { std::vector<Elem> images; };
}  // namespace endo

struct Endomorphism {
  std::variant<endo::Identity, endo::Frobenius, endo::Explicit> node;
};

struct RingSpec;
using SpecPtr = std::shared_ptr<const RingSpec>;

namespace spec {
struct Zn { std::size_t n; };
struct Gf { std::size_t p; std::size_t k; };
struct Product { std::vector<SpecPtr> factors; };
struct Matrix { std::size_t n; SpecPtr base; };
struct Triangular { std::size_t n; SpecPtr base; };
/// Two-sided quotient. With `radical` set the ideal is J(base) and
/// `generators` is ignored.
struct Quotient {
  SpecPtr base;
  std::vector<ElementRef> generators;
  bool radical = false;
};
struct Corner { SpecPtr base; ElementRef idempotent; };
/// Unital subring generated by `generators` together with 1.
struct Subring { SpecPtr base; std::vector<ElementRef> generators; };
struct GroupRing { SpecPtr base; GroupSpec group; };
/// T(A, V); V defaults to the regular bimodule A.
struct TrivialExtension { SpecPtr base; std::optional<ModuleTables> v; };
struct IdealExtension { SpecPtr base; ModuleTables m; };
struct FormalTriangular { SpecPtr a; SpecPtr b; ModuleTables m; };
struct TrivialMorita { SpecPtr a; SpecPtr b; ModuleTables m; ModuleTables n; };
struct TruncPoly { SpecPtr base; std::size_t n; };
struct SkewTruncPoly { SpecPtr base; Endomorphism alpha; std::size_t n; };
struct Opposite { SpecPtr base; };
struct Tables {
  Table add;
  Table mul;
  std::vector<std::string> labels;
};
}  // namespace spec

/// Declarative construction tree. Immutable; children are shared.
struct RingSpec {
  std::variant<spec::Zn, spec::Gf, spec::Product, spec::Matrix, spec::Triangular,
               spec::Quotient, spec::Corner, spec::Subring, spec::GroupRing,
               spec::TrivialExtension, spec::IdealExtension,
               spec::FormalTriangular, spec::TrivialMorita, spec::TruncPoly,
               spec::SkewTruncPoly, spec::Opposite, spec::Tables>
      node;
};

template <typename Node>
SpecPtr make_spec(Node node) {
  return std::make_shared<const RingSpec>(RingSpec{std::move(node)});
}

// Convenience builders for the common families.
SpecPtr zn(std::size_t n);
SpecPtr gf(std::size_t p, std::size_t k);
SpecPtr product(std::vector<SpecPtr> factors);
SpecPtr matrix(std::size_t n, SpecPtr base);
SpecPtr triangular(std::size_t n, SpecPtr base);
SpecPtr radical_quotient(SpecPtr base);
SpecPtr trunc_poly(SpecPtr base, std::size_t n);
SpecPtr trivial_extension(SpecPtr base);
SpecPtr group_ring(SpecPtr base, GroupSpec group);
SpecPtr opposite(SpecPtr base);

GroupSpec cyclic_group(std::size_t n);

Json to_json(const RingSpec& spec);
Json to_json(const GroupSpec& group);
Json to_json(const ModuleTables& m);

/// Parses a spec document; throws SpecError with the offending path.
SpecPtr spec_from_json(const Json& doc, const std::string& path = "$");
GroupSpec group_from_json(const Json& doc, const std::string& path = "$");
ModuleTables module_from_json(const Json& doc, const std::string& path = "$");

/// Compact single-line canonical encoding; equal specs give equal strings.
std::string canonical(const RingSpec& spec);

/// Short human name such as "T2(Z2)" or "Z2C3".
std::string display_name(const RingSpec& spec);
std::string display_name(const GroupSpec& group);

}  // namespace ringlab
