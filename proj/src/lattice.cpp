#include "gsmash/lattice.hpp"

namespace gsmash {

namespace {

PolyMatrix poly_act_element(const Lattice1D& l, const std::vector<Scalar>& a) {
  const FieldSpec& f = l.algebra->field;
  PolyMatrix m = zero_poly_matrix(l.rank, l.rank, f);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + l.action[i].scaled(Poly::constant(a[i]));
  return m;
}

// Does the canonical inclusion [I; 0] of the fiber into the middle module
// admit a module-map retraction? Unknown s is m x 2m.
template <DivisionRingElement K>
bool retraction_exists(const std::vector<Mat<K>>& fiber_act, const std::vector<Mat<K>>& middle_act,
                       std::size_t m, const K& zero, const K& one) {
  const std::size_t unknowns = m * 2 * m;
  std::size_t rows = m * m;
  for (std::size_t g = 0; g < fiber_act.size(); ++g) rows += m * 2 * m;
  Mat<K> sys(rows, unknowns, zero);
  std::vector<K> rhs(rows, zero);
  auto var = [m](std::size_t r, std::size_t c) { return r * 2 * m + c; };
  std::size_t row = 0;
  for (std::size_t g = 0; g < fiber_act.size(); ++g) {
    const Mat<K>& fm = fiber_act[g];
    const Mat<K>& em = middle_act[g];
    // s * em - fm * s = 0, entry (i, j), i < m, j < 2m
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < 2 * m; ++j) {
        for (std::size_t c = 0; c < 2 * m; ++c)
          if (!em(c, j).is_zero()) sys(row, var(i, c)) = sys(row, var(i, c)) + em(c, j);
        for (std::size_t r = 0; r < m; ++r)
          if (!fm(i, r).is_zero()) sys(row, var(r, j)) = sys(row, var(r, j)) - fm(i, r);
        ++row;
      }
  }
  // s restricted to the first m columns is the identity
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      sys(row, var(i, j)) = one;
      rhs[row] = i == j ? one : zero;
      ++row;
    }
  return solve_linear(sys, rhs).has_value();
}

}  // namespace

CheckReport validate_lattice(const Lattice1D& l) {
  const StructureAlgebra& a = *l.algebra;
  if (l.action.size() != a.dim) return {false, "one action matrix per basis element required"};
  for (const PolyMatrix& m : l.action)
    if (m.rows() != l.rank || m.cols() != l.rank) return {false, "action matrix has wrong shape"};
  PolyMatrix unit_act = poly_act_element(l, a.unit);
  PolyMatrix id = PolyMatrix::identity(l.rank, Poly::zero(a.field), Poly::one(a.field));
  if (!(unit_act == id)) return {false, "unit does not act as the identity"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      PolyMatrix lhs = l.action[i] * l.action[j];
      PolyMatrix rhs = zero_poly_matrix(l.rank, l.rank, a.field);
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Scalar& c = a.c(i, j, k);
        if (!c.is_zero()) rhs = rhs + l.action[k].scaled(Poly::constant(c));
      }
      if (!(lhs == rhs))
        return {false, "polynomial identity fails at (" + a.basis_labels[i] + ", " +
                           a.basis_labels[j] + ")"};
    }
  return {true, ""};
}

Lattice1D constant_lattice(const FDModule& m) {
  Lattice1D l;
  l.algebra = m.algebra;
  l.rank = m.dim;
  for (const ExactMatrix& act : m.action) l.action.push_back(poly_matrix_from_constant(act));
  return l;
}

FDModule fiber(const Lattice1D& l, const Scalar& alpha) {
  FDModule m;
  m.algebra = l.algebra;
  m.dim = l.rank;
  for (const PolyMatrix& act : l.action) m.action.push_back(poly_matrix_eval(act, alpha));
  return m;
}

FDModule jet_middle_module(const Lattice1D& l, const Scalar& alpha) {
  const FieldSpec& f = l.algebra->field;
  FDModule m;
  m.algebra = l.algebra;
  m.dim = 2 * l.rank;
  for (const PolyMatrix& act : l.action) {
    ExactMatrix value = poly_matrix_eval(act, alpha);
    ExactMatrix deriv = poly_matrix_eval(poly_matrix_derivative(act), alpha);
    ExactMatrix big = zero_matrix(m.dim, m.dim, f);
    big.paste(0, 0, value);
    big.paste(0, l.rank, deriv);
    big.paste(l.rank, l.rank, value);
    m.action.push_back(std::move(big));
  }
  return m;
}

FDModule tensor_with_poly_quotient(const Lattice1D& l, const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("quotient polynomial must be nonconstant");
  const FieldSpec& field = l.algebra->field;
  const std::size_t d = static_cast<std::size_t>(f.degree());
  Poly monic = f.monic();
  ExactMatrix companion = zero_matrix(d, d, field);
  for (std::size_t j = 0; j + 1 < d; ++j) companion(j + 1, j) = Scalar::one(field);
  for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -monic.coeff(i);
  // powers of the companion matrix
  std::vector<ExactMatrix> powers = {identity_matrix(d, field)};
  FDModule m;
  m.algebra = l.algebra;
  m.dim = l.rank * d;
  for (const PolyMatrix& act : l.action) {
    ExactMatrix big = zero_matrix(m.dim, m.dim, field);
    for (std::size_t r = 0; r < l.rank; ++r)
      for (std::size_t c = 0; c < l.rank; ++c) {
        const Poly& p = act(r, c);
        for (int deg = 0; deg <= p.degree(); ++deg) {
          Scalar coeff = p.coeff(static_cast<std::size_t>(deg));
          if (coeff.is_zero()) continue;
          while (powers.size() <= static_cast<std::size_t>(deg))
            powers.push_back(powers.back() * companion);
          const ExactMatrix& block = powers[static_cast<std::size_t>(deg)];
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              if (!block(i, j).is_zero())
                big(r * d + i, c * d + j) = big(r * d + i, c * d + j) + coeff * block(i, j);
        }
      }
    m.action.push_back(std::move(big));
  }
  return m;
}

ExtClassProbe family_ext_probe(const Lattice1D& l, const Scalar& alpha) {
  ExtClassProbe probe;
  probe.point = alpha;
  probe.fiber_module = fiber(l, alpha);
  probe.middle = jet_middle_module(l, alpha);
  std::vector<ExactMatrix> fiber_act, middle_act;
  for (const std::vector<Scalar>& g : l.algebra->generating_set()) {
    fiber_act.push_back(probe.fiber_module.act_element(g));
    middle_act.push_back(probe.middle.act_element(g));
  }
  probe.nonzero = !retraction_exists(fiber_act, middle_act, l.rank,
                                     Scalar::zero(l.algebra->field), Scalar::one(l.algebra->field));
  return probe;
}

bool generic_probe_nonzero(const Lattice1D& l) {
  const FieldSpec& f = l.algebra->field;
  std::vector<Mat<RatFunc>> fiber_act, middle_act;
  for (const std::vector<Scalar>& g : l.algebra->generating_set()) {
    PolyMatrix act = poly_act_element(l, g);
    PolyMatrix deriv = poly_matrix_derivative(act);
    fiber_act.push_back(poly_matrix_as_ratfunc(act));
    Mat<RatFunc> big(2 * l.rank, 2 * l.rank, RatFunc::zero(f));
    big.paste(0, 0, poly_matrix_as_ratfunc(act));
    big.paste(0, l.rank, poly_matrix_as_ratfunc(deriv));
    big.paste(l.rank, l.rank, poly_matrix_as_ratfunc(act));
    middle_act.push_back(std::move(big));
  }
  return !retraction_exists(fiber_act, middle_act, l.rank, RatFunc::zero(f), RatFunc::one(f));
}

std::vector<Scalar> o1_scan(const Lattice1D& l, const std::vector<Scalar>& points) {
  std::vector<Scalar> nonzero;
  for (const Scalar& alpha : points)
    if (family_ext_probe(l, alpha).nonzero) nonzero.push_back(alpha);
  return nonzero;
}

std::vector<Scalar> default_sample_points(const FieldSpec& f, std::size_t count) {
  std::size_t n = count;
  if (f.kind == FieldKind::prime_field)
    n = std::min<std::size_t>(n, static_cast<std::size_t>(f.characteristic));
  std::vector<Scalar> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Scalar::of_int(static_cast<std::int64_t>(i), f));
  return pts;
}

Lattice1D lattice_pull_up(const SmashProduct& sp, const Lattice1D& l) {
  if (!same_algebra(*l.algebra, *sp.base)) throw std::invalid_argument("lattice is not over the base algebra");
  const FieldSpec& f = sp.base->field;
  const std::size_t n = sp.group.size();
  Lattice1D out;
  out.algebra = sp.algebra;
  out.rank = n * l.rank;
  for (std::size_t k = 0; k < sp.algebra->dim; ++k) {
    auto [j, h] = sp.unindex(k);
    std::size_t to = sp.group.mul(sp.base_degree[j], h);
    PolyMatrix act = zero_poly_matrix(out.rank, out.rank, f);
    act.paste(to * l.rank, h * l.rank, l.action[j]);
    out.action.push_back(std::move(act));
  }
  return out;
}

Lattice1D lattice_push_down(const SmashProduct& sp, const Lattice1D& l) {
  if (!same_algebra(*l.algebra, *sp.algebra)) throw std::invalid_argument("lattice is not over the smash product");
  const FieldSpec& f = sp.base->field;
  Lattice1D out;
  out.algebra = sp.base;
  out.rank = l.rank;
  for (std::size_t i = 0; i < sp.base->dim; ++i) {
    PolyMatrix act = zero_poly_matrix(l.rank, l.rank, f);
    for (std::size_t g = 0; g < sp.group.size(); ++g) act = act + l.action[sp.index(i, g)];
    out.action.push_back(std::move(act));
  }
  return out;
}

namespace {

TransferReport run_transfer(const Lattice1D& before, const Lattice1D& after,
                            const std::vector<Scalar>& points, bool include_generic) {
  TransferReport rep;
  for (const Scalar& alpha : points) {
    TransferPointResult r;
    r.point = alpha;
    r.before = family_ext_probe(before, alpha).nonzero;
    r.after = family_ext_probe(after, alpha).nonzero;
    r.violation = r.before && !r.after;
    if (r.violation) rep.ok = false;
    rep.points.push_back(std::move(r));
  }
  if (include_generic) {
    rep.generic_before = generic_probe_nonzero(before);
    rep.generic_after = generic_probe_nonzero(after);
    rep.generic_violation = *rep.generic_before && !*rep.generic_after;
    if (rep.generic_violation) rep.ok = false;
  }
  return rep;
}

}  // namespace

TransferReport transfer_direction_down(const SmashProduct& sp, const Lattice1D& l_over_b,
                                       const std::vector<Scalar>& points, bool include_generic) {
  return run_transfer(l_over_b, lattice_push_down(sp, l_over_b), points, include_generic);
}

TransferReport transfer_direction_up(const SmashProduct& sp, const Lattice1D& l_over_a,
                                     const std::vector<Scalar>& points, bool include_generic) {
  return run_transfer(l_over_a, lattice_pull_up(sp, l_over_a), points, include_generic);
}

}  // namespace gsmash
