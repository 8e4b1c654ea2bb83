#include "gsmash/examples.hpp"

#include "gsmash/homalg.hpp"

namespace gsmash {

namespace {

QuiverPresentation exterior_presentation(std::size_t n, const FieldSpec& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  for (std::size_t i = 1; i <= n; ++i) p.arrows.push_back({"x" + std::to_string(i), "v", "v", "1"});
  for (std::size_t i = 1; i <= n; ++i) {
    std::string xi = "x" + std::to_string(i);
    p.relations.push_back({{{Scalar::one(f), {xi, xi}}}});
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::string xj = "x" + std::to_string(j);
      p.relations.push_back({{{Scalar::one(f), {xi, xj}}, {Scalar::one(f), {xj, xi}}}});
    }
  }
  p.nilpotency_bound = n + 1;
  return p;
}

QuiverPresentation kronecker_presentation(const std::string& degree) {
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  p.arrows.push_back({"a", "1", "2", degree});
  p.arrows.push_back({"b", "1", "2", degree});
  p.nilpotency_bound = 2;
  return p;
}

LatticePayload kronecker_lattice_payload(const FieldSpec& f) {
  LatticePayload l;
  l.rank = 2;
  PolyMatrix e1 = zero_poly_matrix(2, 2, f), e2 = zero_poly_matrix(2, 2, f);
  e1(0, 0) = Poly::one(f);
  e2(1, 1) = Poly::one(f);
  PolyMatrix a = zero_poly_matrix(2, 2, f), b = zero_poly_matrix(2, 2, f);
  a(1, 0) = Poly::one(f);
  b(1, 0) = Poly::indeterminate(f);
  l.action = {e1, e2, a, b};
  return l;
}

LatticePayload constant_lattice_payload(const std::vector<ExactMatrix>& action, std::size_t dim) {
  LatticePayload l;
  l.rank = dim;
  for (const ExactMatrix& m : action) l.action.push_back(poly_matrix_from_constant(m));
  return l;
}

// constant control for the Kronecker documents: the fiber of the rank-2
// lattice at 0 (arrows acting as (1, 0))
LatticePayload kronecker_constant_payload(const FieldSpec& f) {
  LatticePayload kron = kronecker_lattice_payload(f);
  std::vector<ExactMatrix> acts;
  for (const PolyMatrix& m : kron.action) acts.push_back(poly_matrix_eval(m, Scalar::zero(f)));
  return constant_lattice_payload(acts, 2);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"exterior-n", "kronecker", "kronecker-z2", "a2-z2", "loop-square-z2"};
}

WorkbenchDocument build_example(const std::string& name, std::size_t n, const FieldSpec& field) {
  WorkbenchDocument doc;
  doc.field = field;
  if (name == "exterior-n") {
    if (n < 1) throw std::invalid_argument("exterior-n needs n >= 1");
    doc.group = FiniteGroup::cyclic(n + 1);
    doc.quiver = exterior_presentation(n, field);
    return doc;
  }
  if (name == "kronecker") {
    doc.group = FiniteGroup::trivial();
    doc.quiver = kronecker_presentation("e");
    doc.lattices["kronecker"] = kronecker_lattice_payload(field);
    doc.lattices["constant"] = kronecker_constant_payload(field);
    return doc;
  }
  if (name == "kronecker-z2") {
    doc.group = FiniteGroup::cyclic(2);
    doc.quiver = kronecker_presentation("1");
    doc.lattices["kronecker"] = kronecker_lattice_payload(field);
    doc.lattices["constant"] = kronecker_constant_payload(field);
    return doc;
  }
  if (name == "a2-z2") {
    doc.group = FiniteGroup::cyclic(2);
    QuiverPresentation p;
    p.vertices = {"1", "2"};
    p.arrows.push_back({"a", "1", "2", "1"});
    p.nilpotency_bound = 2;
    doc.quiver = std::move(p);
    return doc;
  }
  if (name == "loop-square-z2") {
    doc.group = FiniteGroup::cyclic(2);
    QuiverPresentation p;
    p.vertices = {"v"};
    p.arrows.push_back({"x", "v", "v", "1"});
    p.relations.push_back({{{Scalar::one(field), {"x", "x"}}}});
    p.nilpotency_bound = 2;
    doc.quiver = std::move(p);
    // nilpotent-loop lattice: x acts as x * E12; the fiber is free away from 0
    LatticePayload nil;
    nil.rank = 2;
    PolyMatrix id2 = PolyMatrix::identity(2, Poly::zero(field), Poly::one(field));
    PolyMatrix loop = zero_poly_matrix(2, 2, field);
    loop(0, 1) = Poly::indeterminate(field);
    nil.action = {id2, loop};
    doc.lattices["nilpotent"] = std::move(nil);
    // constant control: the regular module
    ExactMatrix unit_act = identity_matrix(2, field);
    ExactMatrix x_act = zero_matrix(2, 2, field);
    x_act(1, 0) = Scalar::one(field);
    doc.lattices["constant"] = constant_lattice_payload({unit_act, x_act}, 2);
    return doc;
  }
  throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace gsmash
