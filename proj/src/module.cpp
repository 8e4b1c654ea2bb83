#include "gsmash/module.hpp"

namespace gsmash {

ExactMatrix FDModule::act_element(const std::vector<Scalar>& a) const {
  if (a.size() != algebra->dim) throw std::invalid_argument("element length mismatch");
  ExactMatrix m = zero_matrix(dim, dim, algebra->field);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + action[i].scaled(a[i]);
  return m;
}

FDModule zero_module(AlgebraPtr a) {
  FDModule m;
  m.algebra = a;
  m.dim = 0;
  m.action.assign(a->dim, zero_matrix(0, 0, a->field));
  return m;
}

FDModule regular_module(AlgebraPtr a) {
  FDModule m;
  m.algebra = a;
  m.dim = a->dim;
  for (std::size_t i = 0; i < a->dim; ++i)
    m.action.push_back(a->left_mult(unit_vector(a->dim, i, a->field)));
  return m;
}

FDModule direct_sum(const FDModule& a, const FDModule& b) {
  if (!same_algebra(*a.algebra, *b.algebra)) throw std::invalid_argument("algebra mismatch");
  FDModule s;
  s.algebra = a.algebra;
  s.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    ExactMatrix m = zero_matrix(s.dim, s.dim, a.field());
    m.paste(0, 0, a.action[i]);
    m.paste(a.dim, a.dim, b.action[i]);
    s.action.push_back(std::move(m));
  }
  return s;
}

FDModule direct_sum(AlgebraPtr alg, const std::vector<FDModule>& parts) {
  FDModule s = zero_module(alg);
  for (const FDModule& p : parts) s = direct_sum(s, p);
  return s;
}

CheckReport validate_module(const FDModule& m) {
  const StructureAlgebra& a = *m.algebra;
  if (m.action.size() != a.dim) return {false, "one action matrix per basis element required"};
  for (const ExactMatrix& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim) return {false, "action matrix has wrong shape"};
  if (m.act_element(a.unit) != identity_matrix(m.dim, a.field))
    return {false, "unit does not act as the identity"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      ExactMatrix lhs = m.action[i] * m.action[j];
      ExactMatrix rhs = zero_matrix(m.dim, m.dim, a.field);
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Scalar& c = a.c(i, j, k);
        if (!c.is_zero()) rhs = rhs + m.action[k].scaled(c);
      }
      if (!(lhs == rhs))
        return {false, "action violates the structure constants at (" + a.basis_labels[i] + ", " +
                           a.basis_labels[j] + ")"};
    }
  return {true, ""};
}

bool is_module_map(const FDModule& source, const FDModule& target, const ExactMatrix& f) {
  if (f.rows() != target.dim || f.cols() != source.dim) return false;
  for (const std::vector<Scalar>& g : source.algebra->generating_set())
    if (!(f * source.act_element(g) == target.act_element(g) * f)) return false;
  return true;
}

std::vector<ExactMatrix> hom_space(const FDModule& m, const FDModule& n) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw std::invalid_argument("algebra mismatch");
  const FieldSpec& f = m.field();
  const std::size_t unknowns = n.dim * m.dim;  // F[r][c] at r*m.dim + c
  std::vector<std::vector<Scalar>> gens = m.algebra->generating_set();
  if (unknowns == 0) return {};
  ExactMatrix sys(gens.size() * unknowns, unknowns, Scalar::zero(f));
  std::size_t row = 0;
  for (const std::vector<Scalar>& g : gens) {
    ExactMatrix gm = m.act_element(g);
    ExactMatrix gn = n.act_element(g);
    // condition: gn * F - F * gm = 0, entry (i, j)
    for (std::size_t i = 0; i < n.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) {
        for (std::size_t r = 0; r < n.dim; ++r)
          if (!gn(i, r).is_zero()) sys(row, r * m.dim + j) = sys(row, r * m.dim + j) + gn(i, r);
        for (std::size_t c = 0; c < m.dim; ++c)
          if (!gm(c, j).is_zero()) sys(row, i * m.dim + c) = sys(row, i * m.dim + c) - gm(c, j);
        ++row;
      }
    }
  }
  std::vector<std::vector<Scalar>> ker = kernel_basis(sys, Scalar::one(f));
  std::vector<ExactMatrix> basis;
  for (const std::vector<Scalar>& v : ker) {
    ExactMatrix h = zero_matrix(n.dim, m.dim, f);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) h(r, c) = v[r * m.dim + c];
    basis.push_back(std::move(h));
  }
  return basis;
}

FDModule submodule(const FDModule& m, const ExactMatrix& basis_cols) {
  FDModule s;
  s.algebra = m.algebra;
  s.dim = basis_cols.cols();
  for (const ExactMatrix& act : m.action) {
    std::optional<ExactMatrix> x = solve_matrix(basis_cols, act * basis_cols);
    if (!x) throw std::invalid_argument("subspace is not invariant under the action");
    s.action.push_back(std::move(*x));
  }
  return s;
}

QuotientModule quotient_module(const FDModule& m, const std::vector<std::vector<Scalar>>& sub_span) {
  QuotientModule q;
  q.space = QuotientSpace(m.dim, sub_span, m.field());
  FDModule& out = q.module;
  out.algebra = m.algebra;
  out.dim = q.space.dim();
  for (const ExactMatrix& act : m.action) {
    ExactMatrix qa = zero_matrix(out.dim, out.dim, m.field());
    for (std::size_t k = 0; k < out.dim; ++k) {
      std::vector<Scalar> img = q.space.coords(act.apply(q.space.lift(k)));
      qa.set_col(k, img);
    }
    out.action.push_back(std::move(qa));
  }
  // the subspace must be invariant for the quotient action to be well defined
  for (std::size_t i = 0; i < m.action.size(); ++i)
    for (const std::vector<Scalar>& v : sub_span)
      if (!q.space.contains(m.action[i].apply(v)))
        throw std::invalid_argument("subspace is not invariant under the action");
  return q;
}

}  // namespace gsmash
