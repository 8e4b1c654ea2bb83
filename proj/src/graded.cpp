#include "gsmash/graded.hpp"

namespace gsmash {

GradedStructure grade_loaded_algebra(const LoadedAlgebra& loaded, const FiniteGroup& group,
                                     const std::vector<std::string>& arrow_degree_labels) {
  std::vector<std::size_t> arrow_degree;
  for (const std::string& label : arrow_degree_labels) {
    std::optional<std::size_t> g = group.index_of(label);
    if (!g) throw std::invalid_argument("unknown group element label: " + label);
    arrow_degree.push_back(*g);
  }
  GradedStructure gs;
  gs.algebra = std::make_shared<StructureAlgebra>(loaded.algebra);
  gs.group = group;
  for (const BasisPath& p : loaded.basis_paths) {
    std::size_t d = group.identity;
    // composition order: the path "a then b" is the product b*a
    for (std::size_t k = p.arrows.size(); k-- > 0;) {
      if (p.arrows[k] >= arrow_degree.size())
        throw std::invalid_argument("arrow degree list is too short");
      d = group.mul(d, arrow_degree[p.arrows[k]]);
    }
    gs.degree.push_back(d);
  }
  return gs;
}

CheckReport validate_grading(const GradedStructure& gs) {
  const StructureAlgebra& a = *gs.algebra;
  if (gs.degree.size() != a.dim) return {false, "degree list length differs from algebra dimension"};
  for (std::size_t d : gs.degree)
    if (d >= gs.group.size()) return {false, "degree index out of range"};
  CheckReport grp = check_group(gs.group);
  if (!grp.ok) return {false, "group: " + grp.detail};
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!a.unit[i].is_zero() && gs.degree[i] != gs.group.identity)
      return {false, "unit has support outside degree e (basis element " + a.basis_labels[i] + ")"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::size_t expected = gs.group.mul(gs.degree[i], gs.degree[j]);
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.c(i, j, k).is_zero() && gs.degree[k] != expected)
          return {false, "product " + a.basis_labels[i] + " * " + a.basis_labels[j] +
                             " has support outside degree " + gs.group.elements[expected]};
    }
  return {true, ""};
}

std::optional<SeparabilityWitness> separable_grading_solve(const GradedStructure& gs) {
  CheckReport ok = validate_grading(gs);
  if (!ok.ok) throw std::invalid_argument("invalid grading: " + ok.detail);
  const StructureAlgebra& a = *gs.algebra;
  const std::size_t n = gs.group.size();
  std::vector<std::size_t> e_basis;  // basis indices of A_e
  for (std::size_t i = 0; i < a.dim; ++i)
    if (gs.degree[i] == gs.group.identity) e_basis.push_back(i);
  const std::size_t unknowns = n * e_basis.size();
  auto var = [&](std::size_t g, std::size_t t) { return g * e_basis.size() + t; };

  // rows: normalization (dim A) + commutation (dim A per basis element r and group element g)
  const std::size_t rows = a.dim + a.dim * n * a.dim;
  ExactMatrix sys(rows, unknowns, Scalar::zero(a.field));
  std::vector<Scalar> rhs(rows, Scalar::zero(a.field));
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.dim; ++c) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t t = 0; t < e_basis.size(); ++t)
        if (e_basis[t] == c) sys(row, var(g, t)) = Scalar::one(a.field);
    rhs[row] = a.unit[c];
    ++row;
  }
  for (std::size_t r = 0; r < a.dim; ++r) {
    std::size_t h = gs.degree[r];
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t hg = gs.group.mul(h, g);
      for (std::size_t c = 0; c < a.dim; ++c) {
        for (std::size_t t = 0; t < e_basis.size(); ++t) {
          // coefficient of x^g_t in (b_r * b_t)_c minus x^{hg}_t in (b_t * b_r)_c
          const Scalar& left = a.c(r, e_basis[t], c);
          if (!left.is_zero()) sys(row, var(g, t)) = sys(row, var(g, t)) + left;
          const Scalar& right = a.c(e_basis[t], r, c);
          if (!right.is_zero()) sys(row, var(hg, t)) = sys(row, var(hg, t)) - right;
        }
        ++row;
      }
    }
  }
  std::optional<std::vector<Scalar>> sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  SeparabilityWitness w;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Scalar> xg = zero_vector(a.dim, a.field);
    for (std::size_t t = 0; t < e_basis.size(); ++t) xg[e_basis[t]] = (*sol)[var(g, t)];
    w.x.push_back(std::move(xg));
  }
  return w;
}

CheckReport verify_separability_witness(const GradedStructure& gs, const SeparabilityWitness& w) {
  const StructureAlgebra& a = *gs.algebra;
  const std::size_t n = gs.group.size();
  if (w.x.size() != n) return {false, "witness has wrong number of components"};
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < a.dim; ++i)
      if (!w.x[g][i].is_zero() && gs.degree[i] != gs.group.identity)
        return {false, "x^" + gs.group.elements[g] + " has support outside A_e"};
  std::vector<Scalar> sum = zero_vector(a.dim, a.field);
  for (std::size_t g = 0; g < n; ++g) sum = vector_add(sum, w.x[g]);
  if (sum != a.unit) return {false, "witness components do not sum to 1"};
  for (std::size_t r = 0; r < a.dim; ++r) {
    std::size_t h = gs.degree[r];
    std::vector<Scalar> br = unit_vector(a.dim, r, a.field);
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t hg = gs.group.mul(h, g);
      if (a.mul(br, w.x[g]) != a.mul(w.x[hg], br))
        return {false, "commutation fails for basis element " + a.basis_labels[r] + " and g = " +
                           gs.group.elements[g]};
    }
  }
  return {true, ""};
}

bool witness_strictly_central(const GradedStructure& gs, const SeparabilityWitness& w) {
  const StructureAlgebra& a = *gs.algebra;
  for (const std::vector<Scalar>& xg : w.x)
    for (std::size_t i = 0; i < a.dim; ++i) {
      std::vector<Scalar> bi = unit_vector(a.dim, i, a.field);
      if (a.mul(xg, bi) != a.mul(bi, xg)) return false;
    }
  return true;
}

SmashProduct smash_product(const GradedStructure& gs) {
  CheckReport ok = validate_grading(gs);
  if (!ok.ok) throw std::invalid_argument("invalid grading: " + ok.detail);
  const StructureAlgebra& a = *gs.algebra;
  const std::size_t n = gs.group.size();
  SmashProduct sp;
  sp.base = gs.algebra;
  sp.group = gs.group;
  sp.base_degree = gs.degree;

  auto b = std::make_shared<StructureAlgebra>();
  b->field = a.field;
  b->dim = a.dim * n;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < a.dim; ++i)
      b->basis_labels.push_back(a.basis_labels[i] + "#" + gs.group.elements[g]);
  b->constants.assign(b->dim * b->dim * b->dim, Scalar::zero(a.field));
  // (b_i p_g)(b_j p_h) = b_i b_j p_h when deg(b_j) h = g, else 0
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t j = 0; j < a.dim; ++j) {
        if (gs.group.mul(gs.degree[j], h) != g) continue;
        for (std::size_t i = 0; i < a.dim; ++i) {
          std::size_t bi = g * a.dim + i;
          std::size_t bj = h * a.dim + j;
          for (std::size_t k = 0; k < a.dim; ++k) {
            const Scalar& c = a.c(i, j, k);
            if (!c.is_zero()) b->c(bi, bj, h * a.dim + k) = c;
          }
        }
      }
  b->unit = zero_vector(b->dim, a.field);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < a.dim; ++i) b->unit[g * a.dim + i] = a.unit[i];
  sp.algebra = b;

  // generators: the p_g plus the embeddings of A's generating set
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t g = 0; g < n; ++g) gens.push_back(sp.p_idempotent(g));
  for (const std::vector<Scalar>& ga : a.generating_set()) gens.push_back(sp.embed(ga));
  b->generators = std::move(gens);
  return sp;
}

std::vector<Scalar> SmashProduct::p_idempotent(std::size_t g) const {
  std::vector<Scalar> v = zero_vector(algebra->dim, algebra->field);
  for (std::size_t i = 0; i < base->dim; ++i) v[g * base->dim + i] = base->unit[i];
  return v;
}

std::vector<Scalar> SmashProduct::embed(const std::vector<Scalar>& a) const {
  if (a.size() != base->dim) throw std::invalid_argument("element length mismatch");
  std::vector<Scalar> v = zero_vector(algebra->dim, algebra->field);
  for (std::size_t g = 0; g < group.size(); ++g)
    for (std::size_t i = 0; i < base->dim; ++i) v[g * base->dim + i] = a[i];
  return v;
}

ExactMatrix SmashProduct::group_translate(std::size_t x) const {
  ExactMatrix m = zero_matrix(algebra->dim, algebra->dim, algebra->field);
  for (std::size_t g = 0; g < group.size(); ++g) {
    std::size_t gx = group.mul(g, x);
    for (std::size_t i = 0; i < base->dim; ++i)
      m(gx * base->dim + i, g * base->dim + i) = Scalar::one(algebra->field);
  }
  return m;
}

}  // namespace gsmash
