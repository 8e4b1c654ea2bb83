#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsmash/field.hpp"
#include "gsmash/matrix.hpp"

namespace gsmash {

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
  Poly() : field_(FieldSpec::rationals()) {}
  explicit Poly(const FieldSpec& f) : field_(f) {}

  static Poly zero(const FieldSpec& f) { return Poly(f); }
  static Poly one(const FieldSpec& f) { return constant(Scalar::one(f)); }
  static Poly indeterminate(const FieldSpec& f);
  static Poly constant(const Scalar& c);
  static Poly from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs);

  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  Scalar eval(const Scalar& a) const;
  Poly monic() const;

  // quotient and remainder; throws on zero divisor
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // monic, or zero if both zero
  // (g, u, v) with u*a + v*b = g and g the monic gcd
  static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);

  std::string str(const std::string& var = "x") const;

private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> c_;
};

// Rational function num/den in canonical form: den monic, gcd(num, den) = 1.
class RatFunc {
public:
  RatFunc() : num_(), den_(Poly::one(FieldSpec::rationals())) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one(num_.field())) {}
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FieldSpec& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const FieldSpec& f) { return RatFunc(Poly::one(f)); }
  static RatFunc indeterminate(const FieldSpec& f) { return RatFunc(Poly::indeterminate(f)); }

  const FieldSpec& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

private:
  void normalize();

  Poly num_, den_;
};

using PolyMatrix = Mat<Poly>;

PolyMatrix zero_poly_matrix(std::size_t r, std::size_t c, const FieldSpec& f);
PolyMatrix poly_matrix_from_constant(const ExactMatrix& m);
ExactMatrix poly_matrix_eval(const PolyMatrix& m, const Scalar& a);
PolyMatrix poly_matrix_derivative(const PolyMatrix& m);
Mat<RatFunc> poly_matrix_as_ratfunc(const PolyMatrix& m);

}  // namespace gsmash
