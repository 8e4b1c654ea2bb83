#include "gsmash/algebra.hpp"

#include <algorithm>

namespace gsmash {

SubspaceBasis subspace_from_spanning(std::size_t ambient,
                                     const std::vector<std::vector<Scalar>>& spanning,
                                     const FieldSpec& f) {
  ExactMatrix m(spanning.size(), ambient, Scalar::zero(f));
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != ambient) throw std::invalid_argument("spanning vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = spanning[i][j];
  }
  std::vector<std::size_t> pivots = rref_in_place(m);
  SubspaceBasis s;
  s.ambient_dim = ambient;
  for (std::size_t r = 0; r < pivots.size(); ++r) s.vectors.push_back(m.row(r));
  return s;
}

bool subspace_contains(const SubspaceBasis& s, const std::vector<Scalar>& v) {
  if (v.size() != s.ambient_dim) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> w = v;
  for (const std::vector<Scalar>& row : s.vectors) {
    std::size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    if (p == row.size()) continue;
    if (w[p].is_zero()) continue;
    Scalar f = w[p];
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = w[j] - f * row[j];
  }
  return vector_is_zero(w);
}

QuotientSpace::QuotientSpace(std::size_t ambient,
                             const std::vector<std::vector<Scalar>>& spanning,
                             const FieldSpec& f)
    : ambient_(ambient), field_(f) {
  for (const std::vector<Scalar>& s : spanning) {
    if (s.size() != ambient) throw std::invalid_argument("spanning vector length mismatch");
    std::vector<Scalar> v = reduce(s);
    std::size_t p = ambient;
    for (std::size_t j = ambient; j-- > 0;) {
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    }
    if (p == ambient) continue;  // dependent
    Scalar inv = v[p].inverse();
    for (Scalar& x : v) x = x * inv;
    // clear coordinate p from earlier rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r][p].is_zero()) continue;
      Scalar c = rows_[r][p];
      for (std::size_t j = 0; j < ambient; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
    }
    rows_.push_back(std::move(v));
    pivot_of_row_.push_back(p);
  }
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : pivot_of_row_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) kept_.push_back(j);
}

std::vector<Scalar> QuotientSpace::reduce(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivot_of_row_[r];
    if (w[p].is_zero()) continue;
    Scalar c = w[p];
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - c * rows_[r][j];
  }
  return w;
}

std::vector<Scalar> QuotientSpace::coords(const std::vector<Scalar>& v) const {
  std::vector<Scalar> w = reduce(v);
  std::vector<Scalar> c;
  c.reserve(kept_.size());
  for (std::size_t j : kept_) c.push_back(w[j]);
  return c;
}

bool QuotientSpace::contains(const std::vector<Scalar>& v) const {
  return vector_is_zero(reduce(v));
}

std::vector<Scalar> QuotientSpace::lift(std::size_t k) const {
  return unit_vector(ambient_, kept_.at(k), field_);
}

std::vector<Scalar> StructureAlgebra::mul_basis(std::size_t i, std::size_t j) const {
  std::vector<Scalar> r(dim, Scalar::zero(field));
  for (std::size_t k = 0; k < dim; ++k) r[k] = c(i, j, k);
  return r;
}

std::vector<Scalar> StructureAlgebra::mul(const std::vector<Scalar>& u,
                                          const std::vector<Scalar>& v) const {
  if (u.size() != dim || v.size() != dim) throw std::invalid_argument("element length mismatch");
  std::vector<Scalar> r(dim, Scalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& cc = c(i, j, k);
        if (!cc.is_zero()) r[k] = r[k] + uv * cc;
      }
    }
  }
  return r;
}

ExactMatrix StructureAlgebra::left_mult(const std::vector<Scalar>& u) const {
  ExactMatrix m(dim, dim, Scalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& cc = c(i, j, k);
        if (!cc.is_zero()) m(k, j) = m(k, j) + u[i] * cc;
      }
  }
  return m;
}

ExactMatrix StructureAlgebra::right_mult(const std::vector<Scalar>& u) const {
  ExactMatrix m(dim, dim, Scalar::zero(field));
  for (std::size_t j = 0; j < dim; ++j) {
    if (u[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& cc = c(i, j, k);
        if (!cc.is_zero()) m(k, i) = m(k, i) + u[j] * cc;
      }
  }
  return m;
}

std::vector<std::vector<Scalar>> StructureAlgebra::generating_set() const {
  if (!generators.empty()) return generators;
  std::vector<std::vector<Scalar>> g;
  g.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) g.push_back(unit_vector(dim, i, field));
  return g;
}

bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (&a == &b) return true;
  return a.field == b.field && a.dim == b.dim && a.constants == b.constants && a.unit == b.unit;
}

CheckReport check_algebra(const StructureAlgebra& a) {
  if (a.dim == 0) return {false, "algebra dimension must be >= 1"};
  if (a.constants.size() != a.dim * a.dim * a.dim || a.unit.size() != a.dim)
    return {false, "structure tensor or unit has wrong size"};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t l = 0; l < a.dim; ++l) {
        std::vector<Scalar> lhs(a.dim, Scalar::zero(a.field));
        std::vector<Scalar> rhs(a.dim, Scalar::zero(a.field));
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Scalar& cijk = a.c(i, j, k);
          if (!cijk.is_zero())
            for (std::size_t m = 0; m < a.dim; ++m) {
              const Scalar& cklm = a.c(k, l, m);
              if (!cklm.is_zero()) lhs[m] = lhs[m] + cijk * cklm;
            }
          const Scalar& cjlk = a.c(j, l, k);
          if (!cjlk.is_zero())
            for (std::size_t m = 0; m < a.dim; ++m) {
              const Scalar& cikm = a.c(i, k, m);
              if (!cikm.is_zero()) rhs[m] = rhs[m] + cjlk * cikm;
            }
        }
        if (lhs != rhs)
          return {false, "associativity fails at basis triple (" + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(l) + ")"};
      }
  for (std::size_t j = 0; j < a.dim; ++j) {
    std::vector<Scalar> ej = unit_vector(a.dim, j, a.field);
    if (a.mul(a.unit, ej) != ej)
      return {false, "unit fails as left identity on basis element " + std::to_string(j)};
    if (a.mul(ej, a.unit) != ej)
      return {false, "unit fails as right identity on basis element " + std::to_string(j)};
  }
  return {true, ""};
}

SubspaceBasis radical(const StructureAlgebra& a) {
  if (a.field.kind == FieldKind::prime_field &&
      a.field.characteristic <= static_cast<std::int64_t>(a.dim))
    throw std::domain_error(
        "trace-form radical needs characteristic 0 or p > dim; got p = " +
        std::to_string(a.field.characteristic) + ", dim = " + std::to_string(a.dim));
  // tr(L_{b_i b_j}) = sum_k c[i][j][k] tr(L_{b_k})
  std::vector<Scalar> tr(a.dim, Scalar::zero(a.field));
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t j = 0; j < a.dim; ++j) tr[k] = tr[k] + a.c(k, j, j);
  ExactMatrix gram(a.dim, a.dim, Scalar::zero(a.field));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Scalar s = Scalar::zero(a.field);
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Scalar& cc = a.c(i, j, k);
        if (!cc.is_zero() && !tr[k].is_zero()) s = s + cc * tr[k];
      }
      gram(i, j) = s;
    }
  // x in rad iff sum_i x_i gram(i, j) = 0 for all j
  std::vector<std::vector<Scalar>> ker = kernel_basis(gram.transpose(), Scalar::one(a.field));
  return subspace_from_spanning(a.dim, ker, a.field);
}

std::size_t loewy_length(const StructureAlgebra& a) {
  SubspaceBasis rad = radical(a);
  if (rad.dim() == 0) return 1;
  std::vector<std::vector<Scalar>> power = rad.vectors;
  std::size_t level = 1;
  while (!power.empty()) {
    ++level;
    if (level > a.dim + 1) throw std::logic_error("radical does not appear to be nilpotent");
    std::vector<std::vector<Scalar>> next;
    for (const std::vector<Scalar>& x : power)
      for (const std::vector<Scalar>& y : rad.vectors) next.push_back(a.mul(x, y));
    power = subspace_from_spanning(a.dim, next, a.field).vectors;
  }
  return level;
}

Poly element_min_poly(const AlgebraOps& a, const std::vector<Scalar>& z) {
  return [&] {
    // powers relative to the algebra unit
    std::vector<std::vector<Scalar>> powers = {a.unit};
    for (std::size_t k = 1; k <= a.dim + 1; ++k) {
      std::vector<Scalar> next = a.mul(powers.back(), z);
      ExactMatrix m(a.unit.size(), powers.size(), Scalar::zero(a.field));
      for (std::size_t c = 0; c < powers.size(); ++c) m.set_col(c, powers[c]);
      if (std::optional<std::vector<Scalar>> x = solve_linear(m, next)) {
        std::vector<Scalar> coeffs;
        for (const Scalar& xi : *x) coeffs.push_back(-xi);
        coeffs.push_back(Scalar::one(a.field));
        return Poly::from_coeffs(a.field, coeffs);
      }
      powers.push_back(std::move(next));
    }
    throw std::logic_error("minimal polynomial search did not terminate");
  }();
}

namespace {

// z^i relative to a corner unit f (z^0 = f)
std::vector<Scalar> eval_poly_at_element(const AlgebraOps& a, const Poly& p,
                                         const std::vector<Scalar>& f,
                                         const std::vector<Scalar>& z) {
  std::vector<Scalar> acc(f.size(), Scalar::zero(a.field));
  std::vector<Scalar> power = f;
  for (int i = 0; i <= p.degree(); ++i) {
    Scalar c = p.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) acc = vector_add(acc, vector_scale(c, power));
    if (i < p.degree()) power = a.mul(power, z);
  }
  return acc;
}

Poly min_poly_in_corner(const AlgebraOps& a, const std::vector<Scalar>& f,
                        const std::vector<Scalar>& z) {
  AlgebraOps corner = a;
  corner.unit = f;
  return element_min_poly(corner, z);
}

bool vectors_equal(const std::vector<Scalar>& x, const std::vector<Scalar>& y) { return x == y; }

}  // namespace

std::optional<Scalar> some_root(const Poly& p) {
  const FieldSpec f = p.field();
  if (p.is_zero()) return Scalar::zero(f);
  if (p.degree() == 0) return std::nullopt;
  if (p.coeff(0).is_zero()) return Scalar::zero(f);
  if (f.kind == FieldKind::prime_field) {
    if (f.characteristic > 2'000'000) return std::nullopt;  // desk-scale scan only
    for (std::int64_t v = 0; v < f.characteristic; ++v) {
      Scalar cand = Scalar::of_int(v, f);
      if (p.eval(cand).is_zero()) return cand;
    }
    return std::nullopt;
  }
  // rational-root search: clear denominators, enumerate divisor pairs
  mpz_class lcm_den = 1;
  for (const Scalar& c : p.coeffs()) {
    mpz_class den = c.rational().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<mpz_class> ic;
  for (const Scalar& c : p.coeffs()) {
    mpq_class scaled = c.rational() * lcm_den;
    ic.push_back(scaled.get_num());
  }
  mpz_class a0 = abs(ic.front());
  mpz_class ad = abs(ic.back());
  const mpz_class cap = mpz_class("1000000000000");
  if (a0 > cap || ad > cap) return std::nullopt;
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
      }
    }
    for (std::size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
    return small;
  };
  std::vector<mpz_class> nums = divisors(a0);
  std::vector<mpz_class> dens = divisors(ad);
  for (const mpz_class& den : dens)
    for (const mpz_class& num : nums)
      for (int sign : {1, -1}) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        Scalar c = Scalar::parse(cand.get_str(), f);
        if (p.eval(c).is_zero()) return c;
      }
  return std::nullopt;
}

std::optional<std::vector<std::vector<Scalar>>> split_commutative_semisimple(const AlgebraOps& a) {
  std::vector<std::vector<Scalar>> done;
  std::vector<std::vector<Scalar>> work = {a.unit};
  std::size_t steps = 0;
  while (!work.empty()) {
    if (++steps > 4 * a.dim + 8) return std::nullopt;
    std::vector<Scalar> f = work.back();
    work.pop_back();
    // corner f * A (f central idempotent in the commutative algebra)
    std::vector<std::vector<Scalar>> span;
    for (const std::vector<Scalar>& b : a.basis) span.push_back(a.mul(f, b));
    SubspaceBasis corner = subspace_from_spanning(f.size(), span, a.field);
    if (corner.dim() <= 1) {
      done.push_back(f);
      continue;
    }
    bool split_found = false;
    for (const std::vector<Scalar>& z : corner.vectors) {
      Poly m = min_poly_in_corner(a, f, z);
      if (m.degree() < 2) continue;
      if (Poly::gcd(m, m.derivative()).degree() > 0) return std::nullopt;  // not semisimple
      std::optional<Scalar> root = some_root(m);
      if (!root) continue;
      Poly h = Poly::divmod(m, Poly::from_coeffs(a.field, {-*root, Scalar::one(a.field)})).first;
      Scalar hval = h.eval(*root);
      if (hval.is_zero()) return std::nullopt;
      std::vector<Scalar> e = vector_scale(hval.inverse(), eval_poly_at_element(a, h, f, z));
      if (vector_is_zero(e) || vectors_equal(e, f)) continue;
      if (!vectors_equal(a.mul(e, e), e)) return std::nullopt;
      work.push_back(e);
      work.push_back(vector_sub(f, e));
      split_found = true;
      break;
    }
    if (!split_found) return std::nullopt;  // no rational eigenvalue reachable: not split over k
  }
  auto first_nonzero = [](const std::vector<Scalar>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
    return v.size();
  };
  std::sort(done.begin(), done.end(),
            [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
              std::size_t fx = first_nonzero(x), fy = first_nonzero(y);
              if (fx != fy) return fx < fy;
              for (std::size_t i = 0; i < x.size(); ++i) {
                std::string sx = x[i].str(), sy = y[i].str();
                if (sx != sy) return sx < sy;
              }
              return false;
            });
  return done;
}

std::vector<std::vector<Scalar>> primitive_idempotents(const StructureAlgebra& a) {
  SubspaceBasis rad = radical(a);
  QuotientSpace q(a.dim, rad.vectors, a.field);
  const std::size_t qd = q.dim();
  AlgebraOps bar;
  bar.field = a.field;
  bar.dim = qd;
  bar.unit = q.coords(a.unit);
  for (std::size_t i = 0; i < qd; ++i) bar.basis.push_back(unit_vector(qd, i, a.field));
  auto lift_elt = [&](const std::vector<Scalar>& coords) {
    std::vector<Scalar> v(a.dim, Scalar::zero(a.field));
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) v[q.kept()[k]] = coords[k];
    return v;
  };
  bar.mul = [&a, &q, lift_elt](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    return q.coords(a.mul(lift_elt(u), lift_elt(v)));
  };
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = i + 1; j < qd; ++j)
      if (bar.mul(bar.basis[i], bar.basis[j]) != bar.mul(bar.basis[j], bar.basis[i]))
        throw std::domain_error("non-split-basic input");
  std::optional<std::vector<std::vector<Scalar>>> split = split_commutative_semisimple(bar);
  if (!split || split->size() != qd) throw std::domain_error("non-split-basic input");

  auto idempotentize = [&](std::vector<Scalar> e) {
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<Scalar> e2 = a.mul(e, e);
      if (e2 == e) return e;
      std::vector<Scalar> e3 = a.mul(e2, e);
      e = vector_sub(vector_scale(Scalar::of_int(3, a.field), e2),
                     vector_scale(Scalar::of_int(2, a.field), e3));
    }
    throw std::logic_error("idempotent lifting did not converge");
  };

  std::vector<std::vector<Scalar>> result;
  std::vector<Scalar> partial = zero_vector(a.dim, a.field);
  for (const std::vector<Scalar>& ebar : *split) {
    std::vector<Scalar> corner = vector_sub(a.unit, partial);
    std::vector<Scalar> v = a.mul(a.mul(corner, lift_elt(ebar)), corner);
    std::vector<Scalar> e = idempotentize(v);
    if (vector_is_zero(e)) throw std::logic_error("lifted idempotent collapsed to zero");
    result.push_back(e);
    partial = vector_add(partial, e);
  }
  if (partial != a.unit) throw std::logic_error("lifted idempotents do not sum to 1");
  for (std::size_t i = 0; i < result.size(); ++i)
    for (std::size_t j = 0; j < result.size(); ++j) {
      std::vector<Scalar> prod = a.mul(result[i], result[j]);
      if (i == j ? prod != result[i] : !vector_is_zero(prod))
        throw std::logic_error("lifted idempotents are not orthogonal");
    }
  return result;
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  StructureAlgebra op = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) op.c(i, j, k) = a.c(j, i, k);
  return op;
}

}  // namespace gsmash
