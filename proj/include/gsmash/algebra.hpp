#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsmash/field.hpp"
#include "gsmash/matrix.hpp"
#include "gsmash/poly.hpp"

namespace gsmash {

struct CheckReport {
  bool ok = true;
  std::string detail;
};

// Echelonized basis of a subspace of k^ambient (standard RREF rows,
// leftmost-nonzero pivots).
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Scalar>> vectors;

  std::size_t dim() const { return vectors.size(); }
};

SubspaceBasis subspace_from_spanning(std::size_t ambient,
                                     const std::vector<std::vector<Scalar>>& spanning,
                                     const FieldSpec& f);
bool subspace_contains(const SubspaceBasis& s, const std::vector<Scalar>& v);

// Quotient of k^ambient by a subspace. Representatives are supported on the
// kept coordinates; elimination prefers keeping SMALL coordinates (pivots are
// chosen as the last nonzero coordinate of each row), so quotient bases come
// out as the lexicographically earliest ambient coordinates.
class QuotientSpace {
public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient, const std::vector<std::vector<Scalar>>& spanning,
                const FieldSpec& f);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return kept_.size(); }
  const std::vector<std::size_t>& kept() const { return kept_; }
  std::size_t subspace_dim() const { return rows_.size(); }

  std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
  bool contains(const std::vector<Scalar>& v) const;
  std::vector<Scalar> lift(std::size_t k) const;

private:
  std::size_t ambient_ = 0;
  FieldSpec field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::size_t> kept_;
};

// Finite-dimensional associative unital algebra given by structure constants:
// b_i * b_j = sum_k c[i][j][k] b_k.
struct StructureAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<Scalar> constants;  // flattened c[i][j][k], index i*dim*dim + j*dim + k
  std::vector<Scalar> unit;
  // Optional algebra generating set (coordinate vectors). Empty means "use the
  // whole basis"; intertwining solvers restrict to these.
  std::vector<std::vector<Scalar>> generators;

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * dim + j) * dim + k];
  }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
    return constants[(i * dim + j) * dim + k];
  }

  std::vector<Scalar> mul_basis(std::size_t i, std::size_t j) const;
  std::vector<Scalar> mul(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
  ExactMatrix left_mult(const std::vector<Scalar>& u) const;
  ExactMatrix right_mult(const std::vector<Scalar>& u) const;
  std::vector<std::vector<Scalar>> generating_set() const;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b);

// Exhaustive associativity and unit check over all basis triples.
CheckReport check_algebra(const StructureAlgebra& a);

// Jacobson radical via the trace form of the regular representation.
// Requires char 0 or char > dim (throws otherwise).
SubspaceBasis radical(const StructureAlgebra& a);

// Least L with rad(A)^L = 0 (1 for semisimple algebras).
std::size_t loewy_length(const StructureAlgebra& a);

// Complete list of pairwise orthogonal primitive idempotents summing to 1,
// for split basic algebras (A/rad isomorphic to k^n). Throws
// std::domain_error("non-split-basic input") otherwise.
std::vector<std::vector<Scalar>> primitive_idempotents(const StructureAlgebra& a);

StructureAlgebra opposite(const StructureAlgebra& a);

// A finite-dimensional unital algebra presented behind a multiplication
// callback; lets the idempotent machinery run on quotients and End rings
// without materializing a StructureAlgebra.
struct AlgebraOps {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Scalar> unit;
  std::function<std::vector<Scalar>(const std::vector<Scalar>&, const std::vector<Scalar>&)> mul;
  std::vector<std::vector<Scalar>> basis;  // coordinate vectors of a basis
};

// Minimal polynomial of z, computed from the first linear dependence among
// unit, z, z^2, ... (regular representation; faithful since the algebra is unital).
Poly element_min_poly(const AlgebraOps& a, const std::vector<Scalar>& z);

// Primitive idempotents of a commutative split semisimple algebra, or nullopt
// when a required root search fails (non-split input, or root out of reach).
std::optional<std::vector<std::vector<Scalar>>> split_commutative_semisimple(const AlgebraOps& a);

// One root of p in its coefficient field, if the deterministic search finds
// one (full residue scan over F_p, rational-root search over Q).
std::optional<Scalar> some_root(const Poly& p);

}  // namespace gsmash
