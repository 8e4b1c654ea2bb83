#pragma once

#include "gsmash/algebra.hpp"

namespace gsmash {

// Finite-dimensional left module: one action matrix per algebra basis element.
struct FDModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<ExactMatrix> action;

  ExactMatrix act_element(const std::vector<Scalar>& a) const;
  const FieldSpec& field() const { return algebra->field; }
};

FDModule zero_module(AlgebraPtr a);
FDModule regular_module(AlgebraPtr a);  // A as a left module over itself
FDModule direct_sum(const FDModule& a, const FDModule& b);
FDModule direct_sum(AlgebraPtr alg, const std::vector<FDModule>& parts);

// Checks the structure-constant relations and that the unit acts as identity.
CheckReport validate_module(const FDModule& m);

struct ModuleMap {
  FDModule source, target;
  ExactMatrix matrix;
};

bool is_module_map(const FDModule& source, const FDModule& target, const ExactMatrix& f);

// Canonical echelonized basis of Hom_A(M, N); intertwining is imposed on the
// algebra's generating set.
std::vector<ExactMatrix> hom_space(const FDModule& m, const FDModule& n);

// Restriction of the action to an invariant subspace given by independent
// columns; throws if the span is not invariant.
FDModule submodule(const FDModule& m, const ExactMatrix& basis_cols);

struct QuotientModule {
  FDModule module;
  QuotientSpace space;  // translates ambient vectors to quotient coordinates
};

QuotientModule quotient_module(const FDModule& m, const std::vector<std::vector<Scalar>>& sub_span);

}  // namespace gsmash
