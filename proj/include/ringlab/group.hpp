#pragma once

#include "ringlab/ring_spec.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ringlab {

/// Finite group given by a validated multiplication table.
class FiniteGroup {
 public:
  /// Builds a named family or validates an explicit table (associativity,
  /// identity, inverses); throws ConstructionError with a witness.
  static FiniteGroup from_spec(const GroupSpec& spec);

  std::size_t order() const noexcept { return table_.size(); }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  const std::string& name(Elem a) const { return names_[a]; }
  std::size_t element_order(Elem a) const;
  /// Finite p-group test: |G| is a power of p.
  bool is_p_group(std::size_t p) const;

 private:
  FiniteGroup(Table table, Elem identity, std::vector<std::string> names);

  Table table_;
  Elem identity_;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
};

}  // namespace ringlab
