#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsmash/algebra.hpp"

namespace gsmash {

// Finite group with an explicit multiplication table.
struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = index of g*h
  std::size_t identity = 0;
  std::vector<std::size_t> inverses;

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  std::size_t inv(std::size_t g) const { return inverses[g]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
};

// Exhaustive group axiom check (associativity, identity, inverses).
CheckReport check_group(const FiniteGroup& g);

// Builds identity/inverses from a table and validates; throws on a non-group.
FiniteGroup group_from_table(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::size_t>>& table);

}  // namespace gsmash
