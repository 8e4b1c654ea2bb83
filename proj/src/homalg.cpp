#include "gsmash/homalg.hpp"

#include <tuple>

namespace gsmash {

namespace {

std::vector<Scalar> vec_of(const ExactMatrix& m) {
  std::vector<Scalar> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Expresses members of the column span of a fixed independent family.
struct SpanSolver {
  ExactMatrix flat;  // n x s, independent columns
  std::vector<std::size_t> pivot_rows;
  ExactMatrix inv;  // inverse of the pivot-row submatrix
  FieldSpec field;

  std::vector<Scalar> coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> picked;
    picked.reserve(pivot_rows.size());
    for (std::size_t r : pivot_rows) picked.push_back(v[r]);
    std::vector<Scalar> c = inv.apply(picked);
    std::vector<Scalar> check = flat.apply(c);
    if (check != v) throw std::logic_error("vector is not in the expected span");
    return c;
  }
};

SpanSolver make_span_solver(const std::vector<ExactMatrix>& basis, const FieldSpec& f) {
  const std::size_t s = basis.size();
  const std::size_t n = s == 0 ? 0 : basis[0].rows() * basis[0].cols();
  SpanSolver sol;
  sol.field = f;
  sol.flat = zero_matrix(n, s, f);
  for (std::size_t k = 0; k < s; ++k) sol.flat.set_col(k, vec_of(basis[k]));
  ExactMatrix t = sol.flat.transpose();
  sol.pivot_rows = rref_in_place(t);
  if (sol.pivot_rows.size() != s) throw std::logic_error("span basis is not independent");
  ExactMatrix sub = zero_matrix(s, s, f);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) sub(r, c) = sol.flat(sol.pivot_rows[r], c);
  std::optional<ExactMatrix> inv = inverse(sub, Scalar::one(f));
  if (!inv) throw std::logic_error("span solver submatrix is singular");
  sol.inv = std::move(*inv);
  return sol;
}

Scalar trace_of_product(const ExactMatrix& a, const ExactMatrix& b, const FieldSpec& f) {
  Scalar t = Scalar::zero(f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !b(j, i).is_zero()) t = t + a(i, j) * b(j, i);
  return t;
}

ExactMatrix columns_matrix(const std::vector<std::vector<Scalar>>& cols, std::size_t rows,
                           const FieldSpec& f) {
  ExactMatrix m = zero_matrix(rows, cols.size(), f);
  for (std::size_t k = 0; k < cols.size(); ++k) m.set_col(k, cols[k]);
  return m;
}

// The endomorphism ring of M with coordinates over the hom basis.
struct EndRing {
  std::vector<ExactMatrix> basis;
  SpanSolver solver;
};

EndRing make_end_ring(const FDModule& m) {
  EndRing e;
  e.basis = hom_space(m, m);
  e.solver = make_span_solver(e.basis, m.field());
  return e;
}

// A nontrivial idempotent endomorphism of M, or nullopt when M is
// indecomposable. Throws std::domain_error when the semisimple End quotient
// is not split over the ground field (or a root search is out of reach).
std::optional<ExactMatrix> find_splitting_idempotent(const FDModule& m) {
  const FieldSpec f = m.field();
  if (m.dim <= 1) return std::nullopt;
  if (f.kind == FieldKind::prime_field &&
      f.characteristic <= static_cast<std::int64_t>(m.dim))
    throw std::domain_error("decompose needs characteristic 0 or p > dim of the module; got p = " +
                            std::to_string(f.characteristic) + ", dim = " + std::to_string(m.dim));
  EndRing end = make_end_ring(m);
  const std::size_t s = end.basis.size();
  if (s == 1) return std::nullopt;

  // radical of End(M) via the trace form on the action matrices
  ExactMatrix gram = zero_matrix(s, s, f);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) gram(i, j) = trace_of_product(end.basis[i], end.basis[j], f);
  std::vector<std::vector<Scalar>> rad = kernel_basis(gram.transpose(), Scalar::one(f));
  QuotientSpace qbar(s, rad, f);
  const std::size_t qd = qbar.dim();
  if (qd == 1) return std::nullopt;  // local endomorphism ring

  auto bar_lift_matrix = [&](const std::vector<Scalar>& coords) {
    ExactMatrix acc = zero_matrix(m.dim, m.dim, f);
    for (std::size_t k = 0; k < qd; ++k)
      if (!coords[k].is_zero()) acc = acc + end.basis[qbar.kept()[k]].scaled(coords[k]);
    return acc;
  };
  // multiplication table of the quotient, computed once from the matrices
  std::vector<std::vector<std::vector<Scalar>>> table(qd);
  for (std::size_t k = 0; k < qd; ++k) {
    const ExactMatrix& mk = end.basis[qbar.kept()[k]];
    for (std::size_t t = 0; t < qd; ++t)
      table[k].push_back(
          qbar.coords(end.solver.coords(vec_of(mk * end.basis[qbar.kept()[t]]))));
  }
  auto bar_mul = [&table, qd, &f](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> r = zero_vector(qd, f);
    for (std::size_t k = 0; k < qd; ++k) {
      if (u[k].is_zero()) continue;
      for (std::size_t t = 0; t < qd; ++t) {
        if (v[t].is_zero()) continue;
        Scalar uv = u[k] * v[t];
        const std::vector<Scalar>& row = table[k][t];
        for (std::size_t c = 0; c < qd; ++c)
          if (!row[c].is_zero()) r[c] = r[c] + uv * row[c];
      }
    }
    return r;
  };
  std::vector<Scalar> bar_unit = qbar.coords(end.solver.coords(vec_of(identity_matrix(m.dim, f))));

  AlgebraOps bar;
  bar.field = f;
  bar.dim = qd;
  bar.unit = bar_unit;
  bar.mul = bar_mul;
  for (std::size_t k = 0; k < qd; ++k) bar.basis.push_back(unit_vector(qd, k, f));

  std::optional<std::vector<Scalar>> bar_idem;

  // center-first: the center of the split semisimple quotient is commutative
  // split semisimple, and its primitive idempotents split the iso-classes
  {
    ExactMatrix commute(qd * qd, qd, Scalar::zero(f));
    std::size_t row = 0;
    for (std::size_t k = 0; k < qd; ++k) {
      // column t: coords of b_k b_t - b_t b_k
      for (std::size_t t = 0; t < qd; ++t) {
        std::vector<Scalar> d = vector_sub(table[k][t], table[t][k]);
        for (std::size_t c = 0; c < qd; ++c) commute(row + c, t) = d[c];
      }
      row += qd;
    }
    std::vector<std::vector<Scalar>> center = kernel_basis(commute, Scalar::one(f));
    if (center.size() > 1) {
      AlgebraOps z;
      z.field = f;
      z.dim = center.size();
      z.unit = bar_unit;
      z.mul = bar_mul;
      z.basis = center;
      std::optional<std::vector<std::vector<Scalar>>> split = split_commutative_semisimple(z);
      if (!split)
        throw std::domain_error(
            "unable to split the center of a semisimple endomorphism quotient over " + f.name() +
            "; rerun over a suitable F_p");
      bar_idem = (*split)[0];
    }
  }

  if (!bar_idem) {
    // single matrix block: search candidate elements for a split minimal polynomial
    std::vector<std::vector<Scalar>> candidates;
    for (std::size_t k = 0; k < qd; ++k) candidates.push_back(bar.basis[k]);
    for (std::size_t i = 0; i < qd; ++i)
      for (std::size_t j = i + 1; j < qd; ++j) {
        candidates.push_back(vector_add(bar.basis[i], bar.basis[j]));
        candidates.push_back(vector_sub(bar.basis[i], bar.basis[j]));
      }
    for (std::size_t i = 0; i < qd; ++i)
      for (std::size_t j = 0; j < qd; ++j)
        if (i != j) candidates.push_back(bar_mul(bar.basis[i], bar.basis[j]));
    for (const std::vector<Scalar>& z : candidates) {
      Poly mp = element_min_poly(bar, z);
      if (mp.degree() < 2) continue;
      std::optional<Scalar> root = some_root(mp);
      if (!root) continue;
      Poly lin = Poly::from_coeffs(f, {-*root, Scalar::one(f)});
      Poly rest = mp;
      Poly power = Poly::one(f);
      while (true) {
        auto [quot, rem] = Poly::divmod(rest, lin);
        if (!rem.is_zero()) break;
        rest = quot;
        power = power * lin;
      }
      if (rest.degree() < 1) continue;  // mp is a power of (t - root): no split from z
      auto [g, u, v] = Poly::ext_gcd(power, rest);
      if (g.degree() != 0) continue;
      // e = (v * rest)(z) projects onto the generalized root eigenspace
      Poly proj = v * rest;
      std::vector<Scalar> acc = zero_vector(qd, f);
      std::vector<Scalar> zpow = bar.unit;
      for (int i = 0; i <= proj.degree(); ++i) {
        Scalar c = proj.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) acc = vector_add(acc, vector_scale(c, zpow));
        if (i < proj.degree()) zpow = bar_mul(zpow, z);
      }
      if (vector_is_zero(acc) || acc == bar.unit) continue;
      if (bar_mul(acc, acc) != acc) continue;
      bar_idem = acc;
      break;
    }
    if (!bar_idem)
      throw std::domain_error("unable to split a semisimple endomorphism quotient over " +
                              f.name() + "; rerun over a suitable F_p");
  }

  // lift through the nilpotent radical: e <- 3e^2 - 2e^3
  ExactMatrix e = bar_lift_matrix(*bar_idem);
  const Scalar three = Scalar::of_int(3, f), two = Scalar::of_int(2, f);
  for (int iter = 0; iter < 200; ++iter) {
    ExactMatrix e2 = e * e;
    if (e2 == e) {
      if (e.is_zero() || e == identity_matrix(m.dim, f))
        throw std::logic_error("lifted idempotent became trivial");
      return e;
    }
    ExactMatrix e3 = e2 * e;
    e = e2.scaled(three) - e3.scaled(two);
  }
  throw std::logic_error("idempotent lifting did not converge");
}

bool indecomposable_iso(const FDModule& x, const FDModule& y) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  for (const ExactMatrix& h : hom_space(x, y))
    if (rank(h) == x.dim) return true;
  return false;
}

}  // namespace

Decomposition decompose(const FDModule& m) {
  Decomposition out;
  if (m.dim == 0) return out;
  struct Piece {
    FDModule mod;
    ExactMatrix incl, proj;
  };
  const FieldSpec f = m.field();
  std::vector<Piece> queue = {{m, identity_matrix(m.dim, f), identity_matrix(m.dim, f)}};
  std::size_t head = 0;
  while (head < queue.size()) {
    Piece piece = queue[head++];
    std::optional<ExactMatrix> idem = find_splitting_idempotent(piece.mod);
    if (!idem) {
      out.summands.push_back(piece.mod);
      out.inclusions.push_back(piece.incl);
      out.projections.push_back(piece.proj);
      continue;
    }
    ExactMatrix e = *idem;
    ExactMatrix u = column_space_basis(e);
    ExactMatrix v = column_space_basis(identity_matrix(piece.mod.dim, f) - e);
    if (u.cols() + v.cols() != piece.mod.dim) throw std::logic_error("idempotent split dimension error");
    std::optional<ExactMatrix> w = inverse(hstack(u, v), Scalar::one(f));
    if (!w) throw std::logic_error("idempotent split basis is singular");
    ExactMatrix p1 = w->submatrix(0, 0, u.cols(), piece.mod.dim);
    ExactMatrix p2 = w->submatrix(u.cols(), 0, v.cols(), piece.mod.dim);
    queue.push_back({submodule(piece.mod, u), piece.incl * u, p1 * piece.proj});
    queue.push_back({submodule(piece.mod, v), piece.incl * v, p2 * piece.proj});
  }
  return out;
}

bool is_indecomposable(const FDModule& m) {
  return m.dim > 0 && !find_splitting_idempotent(m);
}

bool is_isomorphic(const FDModule& m, const FDModule& n) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw std::invalid_argument("algebra mismatch");
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  Decomposition dm = decompose(m);
  Decomposition dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const FDModule& x : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j]) continue;
      if (indecomposable_iso(x, dn.summands[j])) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

IsoClasses group_into_iso_classes(const std::vector<FDModule>& mods) {
  IsoClasses out;
  for (const FDModule& m : mods) {
    bool found = false;
    for (std::size_t i = 0; i < out.reps.size(); ++i)
      if (indecomposable_iso(m, out.reps[i])) {
        ++out.multiplicity[i];
        found = true;
        break;
      }
    if (!found) {
      out.reps.push_back(m);
      out.multiplicity.push_back(1);
    }
  }
  return out;
}

std::vector<FDModule> indecomposable_projectives(AlgebraPtr a) {
  std::vector<FDModule> out;
  FDModule reg = regular_module(a);
  for (const std::vector<Scalar>& e : primitive_idempotents(*a))
    out.push_back(submodule(reg, column_space_basis(a->right_mult(e))));
  return out;
}

FDModule dual_module(const FDModule& m) {
  FDModule d;
  d.algebra = std::make_shared<StructureAlgebra>(opposite(*m.algebra));
  d.dim = m.dim;
  for (const ExactMatrix& act : m.action) d.action.push_back(act.transpose());
  return d;
}

std::vector<FDModule> indecomposable_injectives(AlgebraPtr a) {
  auto op = std::make_shared<StructureAlgebra>(opposite(*a));
  FDModule reg_op = regular_module(op);
  std::vector<FDModule> out;
  for (const std::vector<Scalar>& e : primitive_idempotents(*a)) {
    // op-module structure on e*A, then dualize back to a left A-module
    FDModule p_op = submodule(reg_op, column_space_basis(op->right_mult(e)));
    FDModule inj = dual_module(p_op);
    inj.algebra = a;  // structurally opposite(opposite(A)) = A
    out.push_back(std::move(inj));
  }
  return out;
}

ModuleMap projective_cover(const FDModule& m) {
  AlgebraPtr a = m.algebra;
  const FieldSpec f = m.field();
  std::vector<std::vector<Scalar>> idems = primitive_idempotents(*a);
  std::vector<FDModule> projectives = indecomposable_projectives(a);

  SubspaceBasis rad = radical(*a);
  std::vector<std::vector<Scalar>> rad_image;
  for (const std::vector<Scalar>& r : rad.vectors) {
    ExactMatrix act = m.act_element(r);
    for (std::size_t j = 0; j < m.dim; ++j) rad_image.push_back(act.col(j));
  }
  QuotientSpace top(m.dim, rad_image, f);

  std::vector<FDModule> pieces;
  std::vector<ExactMatrix> piece_maps;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    ExactMatrix act_e = m.act_element(idems[i]);
    ExactMatrix basis_cols = column_space_basis(a->right_mult(idems[i]));
    SubspaceBasis seen{top.dim(), {}};
    for (std::size_t k = 0; k < top.dim(); ++k) {
      std::vector<Scalar> gen = act_e.apply(top.lift(k));
      std::vector<Scalar> cls = top.coords(gen);
      if (vector_is_zero(cls) || subspace_contains(seen, cls)) continue;
      std::vector<std::vector<Scalar>> grown = seen.vectors;
      grown.push_back(cls);
      seen = subspace_from_spanning(top.dim(), grown, f);
      // one copy of P_i mapping its basis element u to u * gen
      const FDModule& p = projectives[i];
      ExactMatrix piece_map = zero_matrix(m.dim, p.dim, f);
      for (std::size_t c = 0; c < p.dim; ++c)
        piece_map.set_col(c, m.act_element(basis_cols.col(c)).apply(gen));
      pieces.push_back(p);
      piece_maps.push_back(std::move(piece_map));
    }
  }

  ModuleMap cover;
  cover.target = m;
  cover.source = direct_sum(a, pieces);
  cover.matrix = zero_matrix(m.dim, cover.source.dim, f);
  std::size_t col = 0;
  for (const ExactMatrix& pm : piece_maps) {
    cover.matrix.paste(0, col, pm);
    col += pm.cols();
  }
  if (rank(cover.matrix) != m.dim) throw std::logic_error("projective cover is not surjective");
  // minimality: kernel inside rad * P
  std::vector<std::vector<Scalar>> radp;
  for (const std::vector<Scalar>& r : rad.vectors) {
    ExactMatrix act = cover.source.act_element(r);
    for (std::size_t j = 0; j < cover.source.dim; ++j) radp.push_back(act.col(j));
  }
  SubspaceBasis radp_basis = subspace_from_spanning(cover.source.dim, radp, f);
  for (const std::vector<Scalar>& k : kernel_basis(cover.matrix, Scalar::one(f)))
    if (!subspace_contains(radp_basis, k)) throw std::logic_error("projective cover is not minimal");
  return cover;
}

FDModule syzygy(const FDModule& m) {
  ModuleMap cover = projective_cover(m);
  std::vector<std::vector<Scalar>> ker = kernel_basis(cover.matrix, Scalar::one(m.field()));
  return submodule(cover.source, columns_matrix(ker, cover.source.dim, m.field()));
}

ModuleMap injective_hull(const FDModule& m) {
  ModuleMap cover_of_dual = projective_cover(dual_module(m));
  FDModule hull = dual_module(cover_of_dual.source);
  hull.algebra = m.algebra;
  ModuleMap h;
  h.source = m;
  h.target = std::move(hull);
  h.matrix = cover_of_dual.matrix.transpose();
  if (rank(h.matrix) != m.dim) throw std::logic_error("injective hull embedding is not injective");
  return h;
}

FDModule cosyzygy(const FDModule& m) {
  ModuleMap hull = injective_hull(m);
  std::vector<std::vector<Scalar>> image;
  for (std::size_t j = 0; j < m.dim; ++j) image.push_back(hull.matrix.col(j));
  return quotient_module(hull.target, image).module;
}

bool is_projective_module(const FDModule& m) { return syzygy(m).dim == 0; }

bool is_injective_module(const FDModule& m) { return cosyzygy(m).dim == 0; }

Resolution projective_resolution(const FDModule& m, std::size_t length) {
  Resolution res;
  res.target = m;
  ModuleMap cover = projective_cover(m);
  res.projectives.push_back(cover.source);
  res.augmentation = cover.matrix;
  FDModule current = m;
  ExactMatrix current_cover = cover.matrix;
  FDModule current_proj = cover.source;
  for (std::size_t i = 1; i <= length; ++i) {
    std::vector<std::vector<Scalar>> ker = kernel_basis(current_cover, Scalar::one(m.field()));
    ExactMatrix incl = columns_matrix(ker, current_proj.dim, m.field());
    FDModule omega = submodule(current_proj, incl);
    res.kernels.push_back(omega);
    ModuleMap next = projective_cover(omega);
    res.projectives.push_back(next.source);
    res.maps.push_back(incl * next.matrix);
    current = omega;
    current_cover = next.matrix;
    current_proj = next.source;
  }
  return res;
}

ExtResult ext(const FDModule& m, const FDModule& n, std::size_t d) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw std::invalid_argument("algebra mismatch");
  if (d < 1) throw std::invalid_argument("ext requires d >= 1");
  const FieldSpec f = m.field();
  Resolution res = projective_resolution(m, d + 1);
  const FDModule& pd = res.projectives[d];
  std::vector<ExactMatrix> hom = hom_space(pd, n);
  ExtResult out;
  if (hom.empty()) return out;
  const ExactMatrix& d_next = res.maps[d];      // P_{d+1} -> P_d
  const ExactMatrix& d_this = res.maps[d - 1];  // P_d -> P_{d-1}

  // cocycles: f with f * d_next = 0
  ExactMatrix cond(n.dim * d_next.cols(), hom.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < hom.size(); ++k) cond.set_col(k, vec_of(hom[k] * d_next));
  std::vector<std::vector<Scalar>> cocycle_coords = kernel_basis(cond, Scalar::one(f));

  // coboundaries: g * d_this for g in Hom(P_{d-1}, n), expressed in hom coords
  std::vector<std::vector<Scalar>> coboundary_coords;
  if (!hom.empty()) {
    SpanSolver solver = make_span_solver(hom, f);
    const FDModule& pprev = res.projectives[d - 1];
    for (const ExactMatrix& g : hom_space(pprev, n))
      coboundary_coords.push_back(solver.coords(vec_of(g * d_this)));
  }
  QuotientSpace mod_boundaries(hom.size(), coboundary_coords, f);
  SubspaceBasis picked{mod_boundaries.dim(), {}};
  for (const std::vector<Scalar>& z : cocycle_coords) {
    std::vector<Scalar> cls = mod_boundaries.coords(z);
    if (vector_is_zero(cls) || subspace_contains(picked, cls)) continue;
    std::vector<std::vector<Scalar>> grown = picked.vectors;
    grown.push_back(cls);
    picked = subspace_from_spanning(mod_boundaries.dim(), grown, f);
    ExactMatrix rep = zero_matrix(n.dim, pd.dim, f);
    for (std::size_t k = 0; k < hom.size(); ++k)
      if (!z[k].is_zero()) rep = rep + hom[k].scaled(z[k]);
    out.cocycles.push_back(std::move(rep));
  }
  out.dimension = out.cocycles.size();
  return out;
}

StableHomResult stable_hom(const FDModule& m, const FDModule& n) {
  if (!same_algebra(*m.algebra, *n.algebra)) throw std::invalid_argument("algebra mismatch");
  const FieldSpec f = m.field();
  std::vector<ExactMatrix> hom = hom_space(m, n);
  StableHomResult out;
  if (hom.empty()) return out;
  ModuleMap hull = injective_hull(m);
  SpanSolver solver = make_span_solver(hom, f);
  std::vector<std::vector<Scalar>> factoring;
  for (const ExactMatrix& g : hom_space(hull.target, n))
    factoring.push_back(solver.coords(vec_of(g * hull.matrix)));
  QuotientSpace q(hom.size(), factoring, f);
  out.dimension = q.dim();
  for (std::size_t k = 0; k < q.dim(); ++k) out.basis.push_back(hom[q.kept()[k]]);
  return out;
}

bool injectively_equivalent(const FDModule& x, const FDModule& y) {
  if (!same_algebra(*x.algebra, *y.algebra)) throw std::invalid_argument("algebra mismatch");
  auto residue = [](const FDModule& m) {
    std::vector<FDModule> keep;
    for (const FDModule& s : decompose(m).summands)
      if (!is_injective_module(s)) keep.push_back(s);
    return direct_sum(m.algebra, keep);
  };
  return is_isomorphic(residue(x), residue(y));
}

bool is_self_injective(AlgebraPtr a) {
  std::vector<FDModule> ps = indecomposable_projectives(a);
  std::vector<FDModule> is = indecomposable_injectives(a);
  for (const FDModule& p : ps) {
    bool found = false;
    for (const FDModule& i : is)
      if (indecomposable_iso(p, i)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool extension_class_is_zero(const FDModule& n, const FDModule& e, const FDModule& m,
                             const ExactMatrix& incl, const ExactMatrix& proj) {
  const FieldSpec f = m.field();
  ModuleMap cover = projective_cover(m);
  const FDModule& p0 = cover.source;
  // lift the cover along proj: h with proj * h = cover
  std::vector<ExactMatrix> hom_pe = hom_space(p0, e);
  ExactMatrix lift_sys(m.dim * p0.dim, hom_pe.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < hom_pe.size(); ++k) lift_sys.set_col(k, vec_of(proj * hom_pe[k]));
  std::optional<std::vector<Scalar>> lift = solve_linear(lift_sys, vec_of(cover.matrix));
  if (!lift) throw std::logic_error("projective lift must exist");
  ExactMatrix h = zero_matrix(e.dim, p0.dim, f);
  for (std::size_t k = 0; k < hom_pe.size(); ++k)
    if (!(*lift)[k].is_zero()) h = h + hom_pe[k].scaled((*lift)[k]);
  // restrict to the syzygy and pull back through incl
  std::vector<std::vector<Scalar>> ker = kernel_basis(cover.matrix, Scalar::one(f));
  ExactMatrix u = columns_matrix(ker, p0.dim, f);
  std::optional<ExactMatrix> beta = solve_matrix(incl, h * u);
  if (!beta) throw std::logic_error("connecting map must factor through the kernel");
  // zero class iff beta extends to P_0 -> n along u
  std::vector<ExactMatrix> hom_pn = hom_space(p0, n);
  ExactMatrix ext_sys(n.dim * u.cols(), hom_pn.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < hom_pn.size(); ++k) ext_sys.set_col(k, vec_of(hom_pn[k] * u));
  return solve_linear(ext_sys, vec_of(*beta)).has_value();
}

std::vector<FDModule> simple_modules(AlgebraPtr a) {
  SubspaceBasis rad = radical(*a);
  std::vector<FDModule> out;
  for (const FDModule& p : indecomposable_projectives(a)) {
    std::vector<std::vector<Scalar>> radp;
    for (const std::vector<Scalar>& r : rad.vectors) {
      ExactMatrix act = p.act_element(r);
      for (std::size_t j = 0; j < p.dim; ++j) radp.push_back(act.col(j));
    }
    out.push_back(quotient_module(p, radp).module);
  }
  return out;
}

}  // namespace gsmash
