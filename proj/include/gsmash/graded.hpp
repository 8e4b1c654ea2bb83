#pragma once

#include <optional>

#include "gsmash/algebra.hpp"
#include "gsmash/group.hpp"
#include "gsmash/quiver.hpp"

namespace gsmash {

// A group-graded algebra with a pure-degree basis: each basis element has a
// single degree, so component extraction is coordinate selection.
struct GradedStructure {
  AlgebraPtr algebra;
  FiniteGroup group;
  std::vector<std::size_t> degree;  // group element index per basis element
};

// Degrees of quiver basis paths: product of arrow degrees in composition
// order (reverse travel order), trivial paths in degree e.
GradedStructure grade_loaded_algebra(const LoadedAlgebra& loaded, const FiniteGroup& group,
                                     const std::vector<std::string>& arrow_degree_labels);

// Unit lies in degree e; products of degree-g and degree-h basis elements are
// supported in degree gh.
CheckReport validate_grading(const GradedStructure& gs);

// Elements x^g of A_e with sum 1 and r x^g = x^{hg} r for homogeneous r.
struct SeparabilityWitness {
  std::vector<std::vector<Scalar>> x;  // per group element, coordinates in A
};

std::optional<SeparabilityWitness> separable_grading_solve(const GradedStructure& gs);

// Re-checks both witness conditions by direct multiplication, independently
// of the solver's linear system.
CheckReport verify_separability_witness(const GradedStructure& gs, const SeparabilityWitness& w);

// Stricter reading: every x^g commutes with all of A, not just within A_e.
bool witness_strictly_central(const GradedStructure& gs, const SeparabilityWitness& w);

// Smash product B with basis b_i p_g, flat index g*dim(A) + i.
struct SmashProduct {
  AlgebraPtr algebra;  // B
  AlgebraPtr base;     // A
  FiniteGroup group;
  std::vector<std::size_t> base_degree;

  std::size_t base_dim() const { return base->dim; }
  std::size_t index(std::size_t i, std::size_t g) const { return g * base->dim + i; }
  std::pair<std::size_t, std::size_t> unindex(std::size_t k) const {
    return {k % base->dim, k / base->dim};
  }

  // coordinates of the distinguished idempotent p_g in B
  std::vector<Scalar> p_idempotent(std::size_t g) const;
  // embedding a |-> sum_h a p_h
  std::vector<Scalar> embed(const std::vector<Scalar>& a) const;
  // algebra automorphism b_i p_g |-> b_i p_{gx}
  ExactMatrix group_translate(std::size_t x) const;
};

SmashProduct smash_product(const GradedStructure& gs);

}  // namespace gsmash
