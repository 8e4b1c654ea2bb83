#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace gsmash {

enum class FieldKind { rationals, prime_field };

// Exact coefficient field: Q or F_p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t characteristic = 0;  // 0 for Q, p for F_p

  static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
  static FieldSpec prime_field(std::int64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

bool is_prime(std::int64_t n);

// Immutable exact field element. Rationals are kept reduced with positive
// denominator (GMP canonical form); prime-field residues live in [0, p).
class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return of_int(0, f); }
  static Scalar one(const FieldSpec& f) { return of_int(1, f); }
  static Scalar of_int(std::int64_t n, const FieldSpec& f);
  // Accepts "a/b" or "a" over Q (arbitrary precision), a decimal integer over F_p.
  static Scalar parse(const std::string& s, const FieldSpec& f);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: "a/b" or "a" over Q, decimal residue over F_p.
  std::string str() const;

  const mpq_class& rational() const;  // throws unless over Q
  std::int64_t residue() const;       // throws unless over F_p

private:
  struct Fp {
    std::int64_t value;
    std::int64_t p;
    bool operator==(const Fp&) const = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(Fp e) : v_(e) {}

  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  const Fp& fp() const { return std::get<Fp>(v_); }
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Fp> v_;
};

}  // namespace gsmash
