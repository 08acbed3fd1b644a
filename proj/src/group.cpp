#include "ringlab/group.hpp"

#include "ringlab/error.hpp"
#include "ringlab/overloaded.hpp"

#include <array>

namespace ringlab {

namespace {

std::string power_name(const char* g, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return g;
  return std::string(g) + "^" + std::to_string(i);
}

Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup(Table table, Elem identity, std::vector<std::string> names)
    : table_(std::move(table)), identity_(identity), names_(std::move(names)) {
  const std::size_t n = table_.size();
  inverse_.assign(n, kNoElem);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = table_[x][a]) ++k;
  return k;
}

bool FiniteGroup::is_p_group(std::size_t p) const {
  std::size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

FiniteGroup FiniteGroup::from_spec(const GroupSpec& spec) {
  Table table;
  Elem identity = 0;
  std::vector<std::string> names;

  std::visit(
      Overloaded{
          [&](const group_spec::Cyclic& c) {
            table = cyclic_table(c.n);
            for (std::size_t i = 0; i < c.n; ++i)
              names.push_back(i == 0 ? "1" : power_name("g", i));
          },
          [&](const group_spec::KleinFour&) {
            table.assign(4, std::vector<Elem>(4));
            for (Elem a = 0; a < 4; ++a)
              for (Elem b = 0; b < 4; ++b) table[a][b] = a ^ b;
            names = {"1", "a", "b", "ab"};
          },
          [&](const group_spec::Dihedral& d) {
            // r^i s^j is stored at i + n*j.
            const std::size_t n = d.n;
            table.assign(2 * n, std::vector<Elem>(2 * n));
            for (std::size_t x = 0; x < 2 * n; ++x)
              for (std::size_t y = 0; y < 2 * n; ++y) {
                const std::size_t i = x % n, a = x / n, k = y % n, b = y / n;
                const std::size_t rot = a ? (i + n - k) % n : (i + k) % n;
                table[x][y] = static_cast<Elem>(rot + n * ((a + b) % 2));
              }
            for (std::size_t j = 0; j < 2; ++j)
              for (std::size_t i = 0; i < n; ++i) {
                std::string s = power_name("r", i) + (j ? "s" : "");
                names.push_back(s.empty() ? "1" : s);
              }
          },
          [&](const group_spec::Symmetric3&) {
            // S3 realised as the symmetries of a triangle.
            auto g = from_spec(GroupSpec{group_spec::Dihedral{3}});
            table = g.table_;
            names = g.names_;
          },
          [&](const group_spec::Quaternion8&) {
            // id = 2*unit + sign, units 1,i,j,k.
            static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_mul{{
                {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
                {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
                {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
                {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
            }};
            table.assign(8, std::vector<Elem>(8));
            for (int x = 0; x < 8; ++x)
              for (int y = 0; y < 8; ++y) {
                const auto [sign, unit] = unit_mul[x / 2][y / 2];
                table[x][y] = static_cast<Elem>(2 * unit + ((x % 2) ^ (y % 2) ^ sign));
              }
            names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
          },
          [&](const group_spec::Explicit& e) {
            table = e.table;
            identity = e.identity;
            for (std::size_t i = 0; i < table.size(); ++i)
              names.push_back(i == identity ? "1" : "g" + std::to_string(i));
          },
      },
      spec.node);

  const std::size_t n = table.size();
  if (n == 0) throw ConstructionError("group: empty table");
  if (identity >= n) throw ConstructionError("group: identity out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ConstructionError("group: table is not square");
    for (Elem v : table[a])
      if (v >= n) throw ConstructionError("group: entry out of range");
  }
  for (Elem a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw ConstructionError("group: identity law fails at " + std::to_string(a));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ConstructionError("group: associativity fails at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  FiniteGroup g(std::move(table), identity, std::move(names));
  for (Elem a = 0; a < n; ++a)
    if (g.inverse_[a] == kNoElem)
      throw ConstructionError("group: " + std::to_string(a) + " has no inverse");
  return g;
}

}  // namespace ringlab
