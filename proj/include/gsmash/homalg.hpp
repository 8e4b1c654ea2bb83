#pragma once

#include "gsmash/module.hpp"

namespace gsmash {

// Direct-sum decomposition with explicit witnesses: inclusion and projection
// matrices composing to idempotents of End(M).
struct Decomposition {
  std::vector<FDModule> summands;
  std::vector<ExactMatrix> inclusions;   // dim(M) x dim(summand)
  std::vector<ExactMatrix> projections;  // dim(summand) x dim(M)
};

// Radical-of-End plus idempotent lifting, recursively. Deterministic.
// Throws std::domain_error when a semisimple End quotient cannot be split
// over the ground field (rerun over a suitable F_p).
Decomposition decompose(const FDModule& m);

bool is_indecomposable(const FDModule& m);
bool is_isomorphic(const FDModule& m, const FDModule& n);

struct IsoClasses {
  std::vector<FDModule> reps;
  std::vector<std::size_t> multiplicity;
};

IsoClasses group_into_iso_classes(const std::vector<FDModule>& mods);

std::vector<FDModule> indecomposable_projectives(AlgebraPtr a);
std::vector<FDModule> indecomposable_injectives(AlgebraPtr a);

// Standard duality: transposed actions over the opposite algebra.
FDModule dual_module(const FDModule& m);

ModuleMap projective_cover(const FDModule& m);
ModuleMap injective_hull(const FDModule& m);

FDModule syzygy(const FDModule& m);    // kernel of the projective cover
FDModule cosyzygy(const FDModule& m);  // cokernel of the injective hull

bool is_projective_module(const FDModule& m);
bool is_injective_module(const FDModule& m);

// Minimal projective resolution P_len -> ... -> P_0 -> M.
struct Resolution {
  FDModule target;
  std::vector<FDModule> projectives;
  std::vector<ExactMatrix> maps;  // maps[i]: P_i -> P_{i-1} for i >= 1
  ExactMatrix augmentation;       // P_0 -> M
  std::vector<FDModule> kernels;  // kernels[i] = Omega^{i+1}(M) as abstract module
};

Resolution projective_resolution(const FDModule& m, std::size_t length);

struct ExtResult {
  std::size_t dimension = 0;
  std::vector<ExactMatrix> cocycles;  // representatives in Hom(P_d, N) of an Ext basis
};

ExtResult ext(const FDModule& m, const FDModule& n, std::size_t d);

struct StableHomResult {
  std::size_t dimension = 0;
  std::vector<ExactMatrix> basis;  // representatives modulo maps factoring through I(M)
};

StableHomResult stable_hom(const FDModule& m, const FDModule& n);

// Strips injective indecomposable summands from both sides and compares.
bool injectively_equivalent(const FDModule& x, const FDModule& y);

bool is_self_injective(AlgebraPtr a);

// Class of the extension 0 -> N -incl-> E -proj-> M -> 0 in Ext^1(M, N);
// true iff the class vanishes. Resolution-based, independent of any
// splitting test on E itself.
bool extension_class_is_zero(const FDModule& n, const FDModule& e, const FDModule& m,
                             const ExactMatrix& incl, const ExactMatrix& proj);

// Simple tops of the indecomposable projectives (split basic algebras).
std::vector<FDModule> simple_modules(AlgebraPtr a);

}  // namespace gsmash
