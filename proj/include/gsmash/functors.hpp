#pragma once

#include "gsmash/graded.hpp"
#include "gsmash/module.hpp"

namespace gsmash {

// Induction along A -> B: underlying space ⊕_g (p_g ⊗ M), slot-major layout
// (slot g spans coordinates g*dim(M) .. g*dim(M)+dim(M)-1). A homogeneous
// element a_s p_h sends slot h to slot s*h, acting by a_s.
FDModule pull_up(const SmashProduct& sp, const FDModule& m);

// Restriction along the embedding: same space, a acts as embed(a).
FDModule push_down(const SmashProduct& sp, const FDModule& n);

// Same space, action precomposed with the translation automorphism p_g -> p_{gx}.
FDModule twist_module(const SmashProduct& sp, const FDModule& n, std::size_t x);

// Block-diagonal |G| copies of f between pulled-up modules.
ExactMatrix pull_up_map(const SmashProduct& sp, const ExactMatrix& f);

}  // namespace gsmash
