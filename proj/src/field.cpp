#include "gsmash/field.hpp"

namespace gsmash {

namespace {

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("element not invertible mod p");
  return mod_norm(old_s, p);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (p >= (std::int64_t(1) << 31))
    throw std::invalid_argument("prime-field characteristic must be < 2^31");
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
  return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(characteristic);
}

Scalar Scalar::of_int(std::int64_t n, const FieldSpec& f) {
  if (f.kind == FieldKind::rationals) return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(Fp{mod_norm(n, f.characteristic), f.characteristic});
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& f) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (f.kind == FieldKind::rationals) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
  mpz_class r = z % f.characteristic;
  std::int64_t v = mod_norm(r.get_si(), f.characteristic);
  return Scalar(Fp{v, f.characteristic});
}

FieldSpec Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return FieldSpec::rationals();
  return FieldSpec{FieldKind::prime_field, fp().p};
}

bool Scalar::is_zero() const {
  if (std::holds_alternative<mpq_class>(v_)) return sgn(q()) == 0;
  return fp().value == 0;
}

bool Scalar::is_one() const {
  if (std::holds_alternative<mpq_class>(v_)) return q() == 1;
  return fp().value == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (std::holds_alternative<Fp>(v_) && fp().p != o.fp().p))
    throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  if (std::holds_alternative<mpq_class>(v_)) return Scalar(mpq_class(-q()));
  return Scalar(Fp{fp().value == 0 ? 0 : fp().p - fp().value, fp().p});
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (std::holds_alternative<mpq_class>(v_)) return Scalar(mpq_class(q() + o.q()));
  return Scalar(Fp{mod_norm(fp().value + o.fp().value, fp().p), fp().p});
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (std::holds_alternative<mpq_class>(v_)) return Scalar(mpq_class(q() - o.q()));
  return Scalar(Fp{mod_norm(fp().value - o.fp().value, fp().p), fp().p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (std::holds_alternative<mpq_class>(v_)) return Scalar(mpq_class(q() * o.q()));
  return Scalar(Fp{mod_norm(fp().value * o.fp().value, fp().p), fp().p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (std::holds_alternative<mpq_class>(v_)) return Scalar(mpq_class(1 / q()));
  return Scalar(Fp{mod_inverse(fp().value, fp().p), fp().p});
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (std::holds_alternative<mpq_class>(v_)) return q() == o.q();
  return fp() == o.fp();
}

std::string Scalar::str() const {
  if (std::holds_alternative<mpq_class>(v_)) return q().get_str();
  return std::to_string(fp().value);
}

const mpq_class& Scalar::rational() const {
  if (!std::holds_alternative<mpq_class>(v_))
    throw std::logic_error("rational() called on a prime-field scalar");
  return q();
}

std::int64_t Scalar::residue() const {
  if (!std::holds_alternative<Fp>(v_))
    throw std::logic_error("residue() called on a rational scalar");
  return fp().value;
}

}  // namespace gsmash
