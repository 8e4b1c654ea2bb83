#include "gsmash/group.hpp"

namespace gsmash {

std::optional<std::size_t> FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return i;
  return std::nullopt;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.elements = {"e"};
  g.table = {{0}};
  g.identity = 0;
  g.inverses = {0};
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  FiniteGroup g;
  for (std::size_t i = 0; i < n; ++i) g.elements.push_back(std::to_string(i));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  g.identity = 0;
  g.inverses.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverses[i] = (n - i) % n;
  return g;
}

CheckReport check_group(const FiniteGroup& g) {
  const std::size_t n = g.size();
  if (n == 0) return {false, "group must be nonempty"};
  if (g.table.size() != n || g.inverses.size() != n) return {false, "table or inverse list has wrong size"};
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[i].size() != n) return {false, "table row has wrong size"};
    for (std::size_t j = 0; j < n; ++j)
      if (g.table[i][j] >= n) return {false, "table entry out of range"};
  }
  if (g.identity >= n) return {false, "identity index out of range"};
  for (std::size_t i = 0; i < n; ++i) {
    if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i)
      return {false, "identity axiom fails at element " + g.elements[i]};
    if (g.inverses[i] >= n || g.mul(i, g.inverses[i]) != g.identity ||
        g.mul(g.inverses[i], i) != g.identity)
      return {false, "inverse axiom fails at element " + g.elements[i]};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return {false, "associativity fails at (" + g.elements[a] + ", " + g.elements[b] +
                             ", " + g.elements[c] + ")"};
  return {true, ""};
}

FiniteGroup group_from_table(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::size_t>>& table) {
  FiniteGroup g;
  g.elements = elements;
  g.table = table;
  const std::size_t n = elements.size();
  if (table.size() != n) throw std::invalid_argument("group table has wrong size");
  // identity: the unique e with e*x = x for all x
  bool found = false;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e].size() == n && table[e][x] == x && table[x].size() == n && table[x][e] == x;
    if (ok) {
      g.identity = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("group table has no identity");
  g.inverses.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] == g.identity && table[y][x] == g.identity) {
        g.inverses[x] = y;
        break;
      }
    if (g.inverses[x] == n) throw std::invalid_argument("group table has a non-invertible element");
  }
  CheckReport r = check_group(g);
  if (!r.ok) throw std::invalid_argument("not a group: " + r.detail);
  return g;
}

}  // namespace gsmash
