#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsmash/algebra.hpp"
#include "gsmash/matrix.hpp"
#include "gsmash/poly.hpp"

using namespace gsmash;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ExactMatrix mat(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Scalar::zero(f));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Scalar::of_int(rows[i][j], f);
  return m;
}

std::vector<Scalar> vec(const FieldSpec& f, std::vector<long> v) {
  std::vector<Scalar> r;
  for (long x : v) r.push_back(Scalar::of_int(x, f));
  return r;
}

ExactMatrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
  ExactMatrix m = zero_matrix(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = Scalar::of_int(static_cast<std::int64_t>(rng() % 7) - 3, f);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays canonical") {
  Scalar half = Scalar::parse("2/4", Q);
  CHECK(half.str() == "1/2");
  CHECK(Scalar::parse("-4/8", Q).str() == "-1/2");
  CHECK((Scalar::parse("1/3", Q) + Scalar::parse("1/6", Q)).str() == "1/2");
  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK(Scalar::of_int(-1, f5).str() == "4");
  CHECK((Scalar::of_int(3, f5) * Scalar::of_int(4, f5)).str() == "2");
  CHECK(Scalar::of_int(3, f5).inverse().str() == "2");
  CHECK(Scalar::parse("12", f5).str() == "2");
  CHECK_THROWS(Scalar::of_int(1, Q) + Scalar::of_int(1, f5));
  CHECK_THROWS(Scalar::of_int(0, f5).inverse());
  CHECK_THROWS(FieldSpec::prime_field(6));
  CHECK_THROWS(Scalar::parse("1/0", Q));
}

TEST_CASE("rank examples") {
  CHECK(rank(identity_matrix(2, Q)) == 2);
  CHECK(rank(mat(Q, {{1, 2}, {2, 4}})) == 1);
  FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK(rank(mat(f2, {{1, 1}, {1, 0}})) == 2);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(identity_matrix(2, Q), Scalar::one(Q)).empty());
  CHECK(kernel_basis(zero_matrix(2, 3, Q), Scalar::one(Q)).size() == 3);
  auto k = kernel_basis(mat(Q, {{1, 2}, {2, 4}}), Scalar::one(Q));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec(Q, {-2, 1}));
}

TEST_CASE("solve examples") {
  auto x = solve_linear(identity_matrix(3, Q), vec(Q, {4, 5, 6}));
  REQUIRE(x.has_value());
  CHECK(*x == vec(Q, {4, 5, 6}));
  x = solve_linear(mat(Q, {{1, 1}}), vec(Q, {3}));
  REQUIRE(x.has_value());
  CHECK(*x == vec(Q, {3, 0}));  // canonical: free coordinates zero
  CHECK_FALSE(solve_linear(mat(Q, {{0}}), vec(Q, {1})).has_value());
  CHECK_THROWS(solve_linear(mat(Q, {{1, 1}}), vec(Q, {1, 2})));
}

TEST_CASE("rank-nullity and solve verification on random matrices") {
  std::mt19937_64 rng(12345);
  for (const FieldSpec& f : {Q, FieldSpec::prime_field(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      ExactMatrix m = random_matrix(rng, f, r, c);
      CHECK(rank(m) + kernel_basis(m, Scalar::one(f)).size() == c);
      std::vector<Scalar> b;
      for (std::size_t i = 0; i < r; ++i) b.push_back(Scalar::of_int(static_cast<std::int64_t>(rng() % 5) - 2, f));
      if (auto x = solve_linear(m, b)) CHECK(m.apply(*x) == b);
      for (const auto& k : kernel_basis(m, Scalar::one(f)))
        CHECK(vector_is_zero(m.apply(k)));
    }
  }
}

TEST_CASE("determinism: identical inputs give identical outputs") {
  std::mt19937_64 rng(99);
  ExactMatrix m = random_matrix(rng, Q, 4, 6);
  auto k1 = kernel_basis(m, Scalar::one(Q));
  auto k2 = kernel_basis(m, Scalar::one(Q));
  CHECK(k1 == k2);
}

TEST_CASE("polynomial derivative examples") {
  Poly p = Poly::from_coeffs(Q, {Scalar::one(Q), Scalar::zero(Q), Scalar::one(Q)});  // x^2 + 1
  CHECK(p.derivative() == Poly::from_coeffs(Q, {Scalar::zero(Q), Scalar::of_int(2, Q)}));
  CHECK(Poly::constant(Scalar::of_int(9, Q)).derivative().is_zero());
  FieldSpec f3 = FieldSpec::prime_field(3);
  Poly cube = Poly::from_coeffs(f3, {Scalar::zero(f3), Scalar::zero(f3), Scalar::zero(f3), Scalar::one(f3)});
  CHECK(cube.derivative().is_zero());  // characteristic kills the term
}

TEST_CASE("polynomial matrix evaluation examples") {
  PolyMatrix constant = poly_matrix_from_constant(mat(Q, {{3, 4}, {5, 6}}));
  CHECK(poly_matrix_eval(constant, Scalar::of_int(11, Q)) == mat(Q, {{3, 4}, {5, 6}}));
  PolyMatrix x(1, 1, Poly::zero(Q));
  x(0, 0) = Poly::indeterminate(Q);
  CHECK(poly_matrix_eval(x, Scalar::of_int(5, Q)) == mat(Q, {{5}}));
  PolyMatrix row(1, 2, Poly::zero(Q));
  row(0, 0) = Poly::indeterminate(Q) * Poly::indeterminate(Q);
  row(0, 1) = Poly::indeterminate(Q) + Poly::one(Q);
  CHECK(poly_matrix_eval(row, Scalar::of_int(2, Q)) == mat(Q, {{4, 3}}));
}

TEST_CASE("polynomial division, gcd, extended gcd") {
  Poly x = Poly::indeterminate(Q);
  Poly a = x * x * x - Poly::one(Q);        // x^3 - 1
  Poly b = x * x - Poly::one(Q);            // x^2 - 1
  auto [q, r] = Poly::divmod(a, b);
  CHECK(q == x);
  CHECK(r == x - Poly::one(Q));
  CHECK(Poly::gcd(a, b) == x - Poly::one(Q));
  auto [g, u, v] = Poly::ext_gcd(a, b);
  CHECK(g == x - Poly::one(Q));
  CHECK(u * a + v * b == g);
  CHECK(Poly::gcd(Poly::zero(Q), Poly::zero(Q)).is_zero());
}

TEST_CASE("rational functions reduce to canonical form") {
  Poly x = Poly::indeterminate(Q);
  RatFunc f(x * x - Poly::one(Q), x - Poly::one(Q));  // (x^2-1)/(x-1) = x+1
  CHECK(f == RatFunc(x + Poly::one(Q)));
  RatFunc g = RatFunc::one(Q) / RatFunc(x);
  CHECK(g + RatFunc(x) == RatFunc(x * x + Poly::one(Q), x));
  CHECK((g * RatFunc(x)).is_one());
  CHECK_THROWS(RatFunc(x).inverse() * RatFunc(Poly::zero(Q)).inverse());
  // solve over the rational-function field
  Mat<RatFunc> m(1, 1, RatFunc::zero(Q));
  m(0, 0) = RatFunc(x);
  auto sol = solve_linear(m, std::vector<RatFunc>{RatFunc::one(Q)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == RatFunc(Poly::one(Q), x));
}

TEST_CASE("root search") {
  Poly x = Poly::indeterminate(Q);
  // (x - 3/2)(x + 2)
  Poly p = (x - Poly::constant(Scalar::parse("3/2", Q))) * (x + Poly::constant(Scalar::of_int(2, Q)));
  auto r = some_root(p);
  REQUIRE(r.has_value());
  CHECK(p.eval(*r).is_zero());
  CHECK_FALSE(some_root(x * x + Poly::one(Q)).has_value());
  FieldSpec f7 = FieldSpec::prime_field(7);
  Poly y = Poly::indeterminate(f7);
  auto r7 = some_root(y * y - Poly::constant(Scalar::of_int(2, f7)));  // 3^2 = 2 mod 7
  REQUIRE(r7.has_value());
  CHECK(((*r7) * (*r7)).str() == "2");
}
