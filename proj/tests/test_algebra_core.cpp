#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsmash/algebra.hpp"
#include "gsmash/quiver.hpp"
#include "test_util.hpp"

using namespace gsmash;
using namespace gsmash::testutil;

namespace {

const FieldSpec Q = FieldSpec::rationals();

StructureAlgebra field_algebra(const FieldSpec& f) {
  StructureAlgebra a;
  a.field = f;
  a.dim = 1;
  a.basis_labels = {"1"};
  a.constants = {Scalar::one(f)};
  a.unit = {Scalar::one(f)};
  return a;
}

// k x k with the coordinatewise product
StructureAlgebra product_of_two_fields(const FieldSpec& f) {
  StructureAlgebra a;
  a.field = f;
  a.dim = 2;
  a.basis_labels = {"u", "v"};
  a.constants.assign(8, Scalar::zero(f));
  a.c(0, 0, 0) = Scalar::one(f);
  a.c(1, 1, 1) = Scalar::one(f);
  a.unit = {Scalar::one(f), Scalar::one(f)};
  return a;
}

// Q[i]: split nowhere over Q
StructureAlgebra gaussian_numbers() {
  StructureAlgebra a;
  a.field = Q;
  a.dim = 2;
  a.basis_labels = {"1", "i"};
  a.constants.assign(8, Scalar::zero(Q));
  a.c(0, 0, 0) = Scalar::one(Q);
  a.c(0, 1, 1) = Scalar::one(Q);
  a.c(1, 0, 1) = Scalar::one(Q);
  a.c(1, 1, 0) = Scalar::of_int(-1, Q);
  a.unit = {Scalar::one(Q), Scalar::zero(Q)};
  return a;
}

}  // namespace

TEST_CASE("quiver loader: A_2") {
  LoadedAlgebra la = load_quiver_algebra(a2_presentation(), Q);
  CHECK(la.algebra.dim == 3);
  CHECK(la.algebra.basis_labels == std::vector<std::string>{"e_1", "e_2", "a"});
  CHECK(check_algebra(la.algebra).ok);
  // a = a * e_1 = e_2 * a in composition order
  std::vector<Scalar> a_vec = unit_vector(3, 2, Q);
  std::vector<Scalar> e1 = unit_vector(3, 0, Q);
  std::vector<Scalar> e2 = unit_vector(3, 1, Q);
  CHECK(la.algebra.mul(a_vec, e1) == a_vec);
  CHECK(la.algebra.mul(e2, a_vec) == a_vec);
  CHECK(vector_is_zero(la.algebra.mul(e1, a_vec)));
}

TEST_CASE("quiver loader: k[x]/(x^2)") {
  LoadedAlgebra la = load_quiver_algebra(loop_square_presentation(Q), Q);
  CHECK(la.algebra.dim == 2);
  std::vector<Scalar> x = unit_vector(2, 1, Q);
  CHECK(vector_is_zero(la.algebra.mul(x, x)));
  CHECK(check_algebra(la.algebra).ok);
}

TEST_CASE("quiver loader: exterior algebras") {
  LoadedAlgebra e2 = load_quiver_algebra(exterior_presentation(2, Q), Q);
  CHECK(e2.algebra.dim == 4);
  CHECK(e2.algebra.basis_labels == std::vector<std::string>{"e_v", "x1", "x2", "x1*x2"});
  CHECK(check_algebra(e2.algebra).ok);
  // x2 * x1 = -(x1 then x2) = -x1*x2 in composition order: b_{x2} b_{x1} is
  // the path x1 then x2
  std::vector<Scalar> x1 = unit_vector(4, 1, Q), x2 = unit_vector(4, 2, Q);
  std::vector<Scalar> prod = e2.algebra.mul(x2, x1);
  CHECK(prod[3] == Scalar::one(Q));
  CHECK(e2.algebra.mul(x1, x2)[3] == Scalar::of_int(-1, Q));
  for (std::size_t n = 1; n <= 3; ++n) {
    LoadedAlgebra la = load_quiver_algebra(exterior_presentation(n, Q), Q);
    CHECK(la.algebra.dim == (std::size_t(1) << n));
    CHECK(check_algebra(la.algebra).ok);
  }
}

TEST_CASE("quiver loader rejections") {
  // arrow in the ideal
  QuiverPresentation bad;
  bad.vertices = {"v"};
  bad.arrows.push_back({"x", "v", "v", "0"});
  bad.relations.push_back({{{Scalar::one(Q), {"x", "x"}}}});
  bad.nilpotency_bound = 2;
  // fine: x^2 = 0 with bound 2
  CHECK(load_quiver_algebra(bad, Q).algebra.dim == 2);
  // nilpotency bound too large for the ideal: x^2 not in ideal at bound 3
  QuiverPresentation no_promise = bad;
  no_promise.relations.clear();
  no_promise.nilpotency_bound = 3;
  CHECK_THROWS_WITH_AS(load_quiver_algebra(no_promise, Q),
                       doctest::Contains("nilpotency bound violated"), std::invalid_argument);
  // mismatched endpoints in a relation
  QuiverPresentation mismatched = a2_presentation();
  mismatched.relations.push_back({{{Scalar::one(Q), {"a", "a"}}}});
  CHECK_THROWS_WITH_AS(load_quiver_algebra(mismatched, Q),
                       doctest::Contains("inconsistent source/target"), std::invalid_argument);
}

TEST_CASE("check_algebra cites the broken triple") {
  StructureAlgebra a = load_quiver_algebra(loop_square_presentation(Q), Q).algebra;
  CHECK(check_algebra(a).ok);
  CHECK(check_algebra(field_algebra(Q)).ok);
  // perturbing c[0][0][0] makes e*e = 2e: (e*e)*x differs from e*(e*x)
  a.c(0, 0, 0) = Scalar::of_int(2, Q);
  CheckReport r = check_algebra(a);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("basis triple") != std::string::npos);
}

TEST_CASE("radical examples") {
  StructureAlgebra dual_numbers = load_quiver_algebra(loop_square_presentation(Q), Q).algebra;
  SubspaceBasis rad = radical(dual_numbers);
  REQUIRE(rad.dim() == 1);
  CHECK(rad.vectors[0] == unit_vector(2, 1, Q));
  CHECK(radical(product_of_two_fields(Q)).dim() == 0);
  StructureAlgebra ext2 = load_quiver_algebra(exterior_presentation(2, Q), Q).algebra;
  CHECK(radical(ext2).dim() == 3);
}

TEST_CASE("radical is a nilpotent two-sided ideal") {
  for (const auto& alg : {load_quiver_algebra(exterior_presentation(2, Q), Q).algebra,
                          load_quiver_algebra(a2_presentation(), Q).algebra}) {
    SubspaceBasis rad = radical(alg);
    for (const auto& r : rad.vectors)
      for (std::size_t i = 0; i < alg.dim; ++i) {
        std::vector<Scalar> b = unit_vector(alg.dim, i, alg.field);
        CHECK(subspace_contains(rad, alg.mul(b, r)));
        CHECK(subspace_contains(rad, alg.mul(r, b)));
      }
    // nilpotency witnessed by loewy_length terminating
    CHECK(loewy_length(alg) <= alg.dim + 1);
  }
}

TEST_CASE("radical characteristic guard") {
  FieldSpec f3 = FieldSpec::prime_field(3);
  StructureAlgebra ext2 = load_quiver_algebra(exterior_presentation(2, f3), f3).algebra;
  CHECK_THROWS_WITH_AS(radical(ext2), doctest::Contains("characteristic"), std::domain_error);
}

TEST_CASE("loewy length examples") {
  CHECK(loewy_length(product_of_two_fields(Q)) == 1);
  CHECK(loewy_length(load_quiver_algebra(loop_square_presentation(Q), Q).algebra) == 2);
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(loewy_length(load_quiver_algebra(exterior_presentation(n, Q), Q).algebra) == n + 1);
}

TEST_CASE("primitive idempotents") {
  auto two = primitive_idempotents(product_of_two_fields(Q));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == unit_vector(2, 0, Q));
  CHECK(two[1] == unit_vector(2, 1, Q));

  StructureAlgebra ext2 = load_quiver_algebra(exterior_presentation(2, Q), Q).algebra;
  auto local = primitive_idempotents(ext2);
  REQUIRE(local.size() == 1);
  CHECK(local[0] == ext2.unit);

  StructureAlgebra a2 = load_quiver_algebra(a2_presentation(), Q).algebra;
  auto verts = primitive_idempotents(a2);
  REQUIRE(verts.size() == 2);
  CHECK(verts[0] == unit_vector(3, 0, Q));
  CHECK(verts[1] == unit_vector(3, 1, Q));
}

TEST_CASE("idempotents survive a non-split-basic rejection") {
  CHECK_THROWS_WITH_AS(primitive_idempotents(gaussian_numbers()),
                       doctest::Contains("non-split-basic"), std::domain_error);
}

TEST_CASE("idempotent lifting through a nontrivial radical") {
  // k[x]/(x^2) x k: idempotents must lift through the nilpotent part
  StructureAlgebra a;
  a.field = Q;
  a.dim = 3;
  a.basis_labels = {"u", "x", "v"};
  a.constants.assign(27, Scalar::zero(Q));
  a.c(0, 0, 0) = Scalar::one(Q);
  a.c(0, 1, 1) = Scalar::one(Q);
  a.c(1, 0, 1) = Scalar::one(Q);
  a.c(2, 2, 2) = Scalar::one(Q);
  a.unit = {Scalar::one(Q), Scalar::zero(Q), Scalar::one(Q)};
  REQUIRE(check_algebra(a).ok);
  auto idems = primitive_idempotents(a);
  REQUIRE(idems.size() == 2);
  std::vector<Scalar> sum = vector_add(idems[0], idems[1]);
  CHECK(sum == a.unit);
  for (const auto& e : idems) CHECK(a.mul(e, e) == e);
  CHECK(vector_is_zero(a.mul(idems[0], idems[1])));
}

TEST_CASE("opposite algebra") {
  StructureAlgebra a2 = load_quiver_algebra(a2_presentation(), Q).algebra;
  StructureAlgebra op = opposite(a2);
  CHECK(check_algebra(op).ok);
  StructureAlgebra back = opposite(op);
  CHECK(back.constants == a2.constants);
  CHECK(back.unit == a2.unit);
  StructureAlgebra dual_numbers = load_quiver_algebra(loop_square_presentation(Q), Q).algebra;
  CHECK(opposite(dual_numbers).constants == dual_numbers.constants);
  // reversed quiver: in the opposite, e_1 * a = a (the arrow now ends at 1)
  std::vector<Scalar> a_vec = unit_vector(3, 2, Q);
  CHECK(op.mul(unit_vector(3, 0, Q), a_vec) == a_vec);
  CHECK(vector_is_zero(op.mul(unit_vector(3, 1, Q), a_vec)));
}

TEST_CASE("dim A equals the sum of the projective dimensions") {
  for (const auto& alg : {load_quiver_algebra(a2_presentation(), Q).algebra,
                          load_quiver_algebra(exterior_presentation(2, Q), Q).algebra,
                          product_of_two_fields(Q)}) {
    auto idems = primitive_idempotents(alg);
    std::size_t total = 0;
    for (const auto& e : idems) total += rank(alg.right_mult(e));
    CHECK(total == alg.dim);
  }
}
