#pragma once

#include <string>
#include <vector>

#include "gsmash/algebra.hpp"

namespace gsmash {

struct QuiverArrow {
  std::string name;
  std::string source;
  std::string target;
  std::string degree;  // group element label; grading is resolved downstream
};

// One summand of a relation: coeff times a path written in travel order
// ("a then b" is {"a", "b"}).
struct PathTerm {
  Scalar coeff;
  std::vector<std::string> path;
};

struct QuiverRelation {
  std::vector<PathTerm> terms;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;
  std::size_t nilpotency_bound = 1;  // paths of length >= N lie in the ideal
};

// Basis element of a loaded bound quiver algebra: a residue class represented
// by a single path (trivial paths have an empty arrow list).
struct BasisPath {
  std::size_t source = 0;  // vertex index
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // travel order
};

struct LoadedAlgebra {
  StructureAlgebra algebra;
  std::vector<BasisPath> basis_paths;  // aligned with algebra basis
};

// Quotient of the path algebra by the relation ideal, with basis the
// lexicographically earliest paths of length < N. The algebra product is
// composition order: b_i * b_j traverses path j first, then path i.
LoadedAlgebra load_quiver_algebra(const QuiverPresentation& pres, const FieldSpec& field);

}  // namespace gsmash
