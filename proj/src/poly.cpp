#include "gsmash/poly.hpp"

namespace gsmash {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::indeterminate(const FieldSpec& f) {
  Poly p(f);
  p.c_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Poly Poly::from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs) {
  Poly p(f);
  for (const Scalar& c : coeffs)
    if (!(c.field() == f)) throw std::invalid_argument("coefficient field mismatch");
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Scalar Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

Scalar Poly::leading() const {
  if (c_.empty()) return Scalar::zero(field_);
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Scalar& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
  if (is_zero() || o.is_zero()) return Poly(field_);
  Poly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r = *this;
  for (Scalar& x : r.c_) x = x * c;
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * Scalar::of_int(static_cast<std::int64_t>(i), field_));
  r.trim();
  return r;
}

Scalar Poly::eval(const Scalar& a) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q(a.field_), r = a;
  q.c_.assign(a.c_.size(), Scalar::zero(a.field_));
  Scalar lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    Scalar f = r.leading() * lead_inv;
    q.c_[shift] = q.c_[shift] + f;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r.c_[shift + i] = r.c_[shift + i] - f * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::tuple<Poly, Poly, Poly> Poly::ext_gcd(const Poly& a, const Poly& b) {
  const FieldSpec f = a.field();
  Poly old_r = a, r = b;
  Poly old_u = Poly::one(f), u = Poly::zero(f);
  Poly old_v = Poly::zero(f), v = Poly::one(f);
  while (!r.is_zero()) {
    auto [q, rem] = divmod(old_r, r);
    old_r = r;
    r = rem;
    Poly nu = old_u - q * u;
    old_u = u;
    u = nu;
    Poly nv = old_v - q * v;
    old_v = v;
    v = nv;
  }
  if (old_r.is_zero()) return {old_r, old_u, old_v};
  Scalar inv = old_r.leading().inverse();
  return {old_r.scaled(inv), old_u.scaled(inv), old_v.scaled(inv)};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c_[i].str();
    } else {
      if (!c_[i].is_one()) out += c_[i].str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Scalar lead = den_.leading();
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

PolyMatrix zero_poly_matrix(std::size_t r, std::size_t c, const FieldSpec& f) {
  return PolyMatrix(r, c, Poly::zero(f));
}

PolyMatrix poly_matrix_from_constant(const ExactMatrix& m) {
  PolyMatrix r(m.rows(), m.cols(), Poly::zero(m.zero().field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Poly::constant(m(i, j));
  return r;
}

ExactMatrix poly_matrix_eval(const PolyMatrix& m, const Scalar& a) {
  ExactMatrix r(m.rows(), m.cols(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(a);
  return r;
}

PolyMatrix poly_matrix_derivative(const PolyMatrix& m) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative();
  return r;
}

Mat<RatFunc> poly_matrix_as_ratfunc(const PolyMatrix& m) {
  Mat<RatFunc> r(m.rows(), m.cols(), RatFunc::zero(m.zero().field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
  return r;
}

}  // namespace gsmash
