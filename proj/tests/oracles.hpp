#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "gsmash/functors.hpp"
#include "gsmash/graded.hpp"
#include "gsmash/module.hpp"

namespace gsmash::testoracle {

// B tensor_A M computed literally as (B ⊗ M) / span{ b·embed(a) ⊗ m − b ⊗ a·m },
// with the left B-action b' · [b ⊗ m] = [b'b ⊗ m].
inline FDModule pull_up_by_tensor_quotient(const SmashProduct& sp, const FDModule& m) {
  const StructureAlgebra& b = *sp.algebra;
  const StructureAlgebra& a = *sp.base;
  const FieldSpec& f = a.field;
  const std::size_t big = b.dim * m.dim;
  std::vector<std::vector<Scalar>> relations;
  for (std::size_t k = 0; k < b.dim; ++k)
    for (std::size_t i = 0; i < a.dim; ++i) {
      std::vector<Scalar> ba = b.mul(unit_vector(b.dim, k, f), sp.embed(unit_vector(a.dim, i, f)));
      for (std::size_t t = 0; t < m.dim; ++t) {
        std::vector<Scalar> v = zero_vector(big, f);
        for (std::size_t c = 0; c < b.dim; ++c)
          if (!ba[c].is_zero()) v[c * m.dim + t] = v[c * m.dim + t] + ba[c];
        std::vector<Scalar> am = m.action[i].col(t);
        for (std::size_t s = 0; s < m.dim; ++s)
          if (!am[s].is_zero()) v[k * m.dim + s] = v[k * m.dim + s] - am[s];
        if (!vector_is_zero(v)) relations.push_back(std::move(v));
      }
    }
  QuotientSpace q(big, relations, f);
  FDModule out;
  out.algebra = sp.algebra;
  out.dim = q.dim();
  for (std::size_t l = 0; l < b.dim; ++l) {
    ExactMatrix act = zero_matrix(out.dim, out.dim, f);
    for (std::size_t r = 0; r < out.dim; ++r) {
      std::size_t coord = q.kept()[r];
      std::size_t k = coord / m.dim, t = coord % m.dim;
      std::vector<Scalar> prod = b.mul_basis(l, k);
      std::vector<Scalar> img = zero_vector(big, f);
      for (std::size_t c = 0; c < b.dim; ++c)
        if (!prod[c].is_zero()) img[c * m.dim + t] = prod[c];
      act.set_col(r, q.coords(img));
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace gsmash::testoracle
