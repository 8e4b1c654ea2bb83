#pragma once

#include "gsmash/functors.hpp"
#include "gsmash/module.hpp"
#include "gsmash/poly.hpp"

namespace gsmash {

// A ⊗ k[x]-module, free of finite rank over k[x]: polynomial action matrices
// satisfying the structure-constant relations identically.
struct Lattice1D {
  AlgebraPtr algebra;
  std::size_t rank = 0;
  std::vector<PolyMatrix> action;
};

CheckReport validate_lattice(const Lattice1D& l);

Lattice1D constant_lattice(const FDModule& m);

// Specialization at x = alpha.
FDModule fiber(const Lattice1D& l, const Scalar& alpha);

// L ⊗ k[x]/((x-alpha)^2): block upper-triangular jet with the entrywise
// derivative in the corner.
FDModule jet_middle_module(const Lattice1D& l, const Scalar& alpha);

// Definitional route for L ⊗ k[x]/(f): substitute the companion matrix of f
// into the polynomial action matrices.
FDModule tensor_with_poly_quotient(const Lattice1D& l, const Poly& f);

struct ExtClassProbe {
  std::optional<Scalar> point;  // nullopt marks the generic point
  FDModule fiber_module;
  FDModule middle;
  bool nonzero = false;  // no retraction of the canonical inclusion exists
};

ExtClassProbe family_ext_probe(const Lattice1D& l, const Scalar& alpha);

// Probe with alpha an indeterminate over the rational-function field: true
// certifies nonvanishing outside a finite set of specializations.
bool generic_probe_nonzero(const Lattice1D& l);

std::vector<Scalar> o1_scan(const Lattice1D& l, const std::vector<Scalar>& points);

std::vector<Scalar> default_sample_points(const FieldSpec& f, std::size_t count);

Lattice1D lattice_pull_up(const SmashProduct& sp, const Lattice1D& l);
Lattice1D lattice_push_down(const SmashProduct& sp, const Lattice1D& l);

struct TransferPointResult {
  Scalar point;
  bool before = false;  // probe nonzero for the given lattice
  bool after = false;   // probe nonzero for the transferred lattice
  bool violation = false;
};

struct TransferReport {
  // direction 1: O(L over B) ⊆ O(push_down L); unconditional
  // direction 2: O(L over A) ⊆ O(pull_up L); needs a separability witness
  std::vector<TransferPointResult> points;
  std::optional<bool> generic_before, generic_after;
  bool generic_violation = false;
  bool ok = true;
};

TransferReport transfer_direction_down(const SmashProduct& sp, const Lattice1D& l_over_b,
                                       const std::vector<Scalar>& points, bool include_generic);
TransferReport transfer_direction_up(const SmashProduct& sp, const Lattice1D& l_over_a,
                                     const std::vector<Scalar>& points, bool include_generic);

}  // namespace gsmash
