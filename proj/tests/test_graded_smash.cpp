#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsmash/functors.hpp"
#include "gsmash/graded.hpp"
#include "gsmash/module.hpp"
#include "test_util.hpp"

using namespace gsmash;
using namespace gsmash::testutil;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FDModule one_dim_smash_simple(const SmashProduct& sp, std::size_t vertex_g) {
  // the simple at the p_{vertex_g} vertex of k[x]/(x^2) # Z_2
  FDModule s;
  s.algebra = sp.algebra;
  s.dim = 1;
  for (std::size_t k = 0; k < sp.algebra->dim; ++k) {
    auto [i, g] = sp.unindex(k);
    ExactMatrix m = zero_matrix(1, 1, Q);
    if (g == vertex_g && !sp.base->unit[i].is_zero()) m(0, 0) = sp.base->unit[i];
    s.action.push_back(std::move(m));
  }
  return s;
}

}  // namespace

TEST_CASE("group fixtures and validation") {
  CHECK(check_group(FiniteGroup::trivial()).ok);
  CHECK(check_group(FiniteGroup::cyclic(4)).ok);
  std::vector<std::vector<std::size_t>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS(group_from_table({"e", "g"}, bad));
  FiniteGroup z2 = group_from_table({"0", "1"}, {{0, 1}, {1, 0}});
  CHECK(z2.identity == 0);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("validate_grading accepts the exterior grading and a trivial grading") {
  GradedStructure ext = graded(exterior_presentation(2, Q), Q, FiniteGroup::cyclic(3));
  CHECK(validate_grading(ext).ok);
  // x1*x2 sits in degree 2
  CHECK(ext.degree == std::vector<std::size_t>{0, 1, 1, 2});
  GradedStructure triv = graded_trivially(exterior_presentation(2, Q), Q);
  CHECK(validate_grading(triv).ok);
}

TEST_CASE("validate_grading rejects a unit outside degree e") {
  GradedStructure a2 = graded(a2_presentation(), Q, FiniteGroup::cyclic(2));
  REQUIRE(validate_grading(a2).ok);
  GradedStructure broken = a2;
  broken.degree[0] = 1;  // trivial path e_1 moved out of degree e
  CheckReport r = validate_grading(broken);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("unit") != std::string::npos);
}

TEST_CASE("separability witness: trivial group") {
  GradedStructure triv = graded_trivially(exterior_presentation(2, Q), Q);
  auto w = separable_grading_solve(triv);
  REQUIRE(w.has_value());
  CHECK(w->x.size() == 1);
  CHECK(w->x[0] == triv.algebra->unit);
  CHECK(verify_separability_witness(triv, *w).ok);
}

TEST_CASE("separability witness: exterior n=1 over Q is 1/2, 1/2") {
  GradedStructure ext = graded(exterior_presentation(1, Q), Q, FiniteGroup::cyclic(2));
  auto w = separable_grading_solve(ext);
  REQUIRE(w.has_value());
  Scalar half = Scalar::parse("1/2", Q);
  CHECK(w->x[0] == vector_scale(half, ext.algebra->unit));
  CHECK(w->x[1] == vector_scale(half, ext.algebra->unit));
  CHECK(verify_separability_witness(ext, *w).ok);
  CHECK(witness_strictly_central(ext, *w));
}

TEST_CASE("separability witness: exterior n=1 over F_2 has none") {
  FieldSpec f2 = FieldSpec::prime_field(2);
  GradedStructure ext = graded(exterior_presentation(1, f2), f2, FiniteGroup::cyclic(2));
  CHECK_FALSE(separable_grading_solve(ext).has_value());
}

TEST_CASE("smash with the trivial group reproduces the structure constants") {
  GradedStructure triv = graded_trivially(exterior_presentation(2, Q), Q);
  SmashProduct sp = smash_product(triv);
  CHECK(sp.algebra->dim == triv.algebra->dim);
  CHECK(sp.algebra->constants == triv.algebra->constants);
  CHECK(sp.algebra->unit == triv.algebra->unit);
}

TEST_CASE("smash of k[x]/(x^2) by Z_2 is the two-cycle quiver algebra") {
  GradedStructure gs = graded(loop_square_presentation(Q), Q, FiniteGroup::cyclic(2));
  SmashProduct sp = smash_product(gs);
  const StructureAlgebra& b = *sp.algebra;
  REQUIRE(b.dim == 4);
  CHECK(check_algebra(b).ok);
  // e_0 = 1p_0 and e_1 = 1p_1 are orthogonal idempotents
  std::vector<Scalar> e0 = sp.p_idempotent(0), e1 = sp.p_idempotent(1);
  CHECK(b.mul(e0, e0) == e0);
  CHECK(b.mul(e1, e1) == e1);
  CHECK(vector_is_zero(b.mul(e0, e1)));
  CHECK(vector_add(e0, e1) == b.unit);
  // x p_0 and x p_1 are the two arrows; their products vanish
  std::vector<Scalar> xp0 = unit_vector(4, sp.index(1, 0), Q);
  std::vector<Scalar> xp1 = unit_vector(4, sp.index(1, 1), Q);
  CHECK(vector_is_zero(b.mul(xp0, xp1)));
  CHECK(vector_is_zero(b.mul(xp1, xp0)));
  CHECK(vector_is_zero(b.mul(xp0, xp0)));
  // arrow endpoints: x p_0 = (1 p_1) (x p_0) = (x p_0) (1 p_0)
  CHECK(b.mul(e1, xp0) == xp0);
  CHECK(b.mul(xp0, e0) == xp0);
  // embed(x) = x p_0 + x p_1
  CHECK(sp.embed(unit_vector(2, 1, Q)) == vector_add(xp0, xp1));
  // matches the bound two-cycle quiver algebra basis-for-basis
  QuiverPresentation cycle;
  cycle.vertices = {"0", "1"};
  cycle.arrows.push_back({"s", "0", "1", "0"});
  cycle.arrows.push_back({"t", "1", "0", "0"});
  cycle.relations.push_back({{{Scalar::one(Q), {"s", "t"}}}});
  cycle.relations.push_back({{{Scalar::one(Q), {"t", "s"}}}});
  cycle.nilpotency_bound = 2;
  StructureAlgebra c = load_quiver_algebra(cycle, Q).algebra;
  // bijection: e_0, e_1, s, t  <->  1p_0, 1p_1, xp_0, xp_1
  std::vector<std::size_t> to_b = {sp.index(0, 0), sp.index(0, 1), sp.index(1, 0), sp.index(1, 1)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(c.c(i, j, k) == b.c(to_b[i], to_b[j], to_b[k]));
}

TEST_CASE("smash of the exterior algebra has dimension 2^n (n+1)") {
  GradedStructure gs = graded(exterior_presentation(2, Q), Q, FiniteGroup::cyclic(3));
  SmashProduct sp = smash_product(gs);
  CHECK(sp.algebra->dim == 12);
  CHECK(check_algebra(*sp.algebra).ok);
}

TEST_CASE("the p_g are orthogonal idempotents summing to 1") {
  GradedStructure gs = graded(exterior_presentation(2, Q), Q, FiniteGroup::cyclic(3));
  SmashProduct sp = smash_product(gs);
  std::vector<Scalar> sum = zero_vector(sp.algebra->dim, Q);
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t h = 0; h < 3; ++h) {
      std::vector<Scalar> prod = sp.algebra->mul(sp.p_idempotent(g), sp.p_idempotent(h));
      if (g == h)
        CHECK(prod == sp.p_idempotent(g));
      else
        CHECK(vector_is_zero(prod));
    }
    sum = vector_add(sum, sp.p_idempotent(g));
  }
  CHECK(sum == sp.algebra->unit);
}

TEST_CASE("embed is a unital injective algebra homomorphism") {
  GradedStructure gs = graded(exterior_presentation(2, Q), Q, FiniteGroup::cyclic(3));
  SmashProduct sp = smash_product(gs);
  const StructureAlgebra& a = *gs.algebra;
  CHECK(sp.embed(a.unit) == sp.algebra->unit);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::vector<Scalar> bi = unit_vector(a.dim, i, Q), bj = unit_vector(a.dim, j, Q);
      CHECK(sp.algebra->mul(sp.embed(bi), sp.embed(bj)) == sp.embed(a.mul(bi, bj)));
    }
  // injectivity: the embed images of the basis are independent
  ExactMatrix images = zero_matrix(sp.algebra->dim, a.dim, Q);
  for (std::size_t i = 0; i < a.dim; ++i) images.set_col(i, sp.embed(unit_vector(a.dim, i, Q)));
  CHECK(rank(images) == a.dim);
}

TEST_CASE("B is free as a right A-module with basis the p_g") {
  GradedStructure gs = graded(loop_square_presentation(Q), Q, FiniteGroup::cyclic(2));
  SmashProduct sp = smash_product(gs);
  const StructureAlgebra& a = *gs.algebra;
  ExactMatrix cols = zero_matrix(sp.algebra->dim, sp.algebra->dim, Q);
  std::size_t c = 0;
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t i = 0; i < a.dim; ++i)
      cols.set_col(c++, sp.algebra->mul(sp.p_idempotent(g), sp.embed(unit_vector(a.dim, i, Q))));
  CHECK(rank(cols) == sp.algebra->dim);
}

TEST_CASE("group translation matrices") {
  GradedStructure gs = graded(exterior_presentation(2, Q), Q, FiniteGroup::cyclic(3));
  SmashProduct sp = smash_product(gs);
  const StructureAlgebra& b = *sp.algebra;
  CHECK(sp.group_translate(0) == identity_matrix(b.dim, Q));
  // composition convention: rho_x rho_y = rho_{yx}
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      CHECK(sp.group_translate(x) * sp.group_translate(y) ==
            sp.group_translate(sp.group.mul(y, x)));
  // each translation is an algebra automorphism
  for (std::size_t x = 0; x < 3; ++x) {
    ExactMatrix rho = sp.group_translate(x);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        std::vector<Scalar> lhs = rho.apply(b.mul(unit_vector(b.dim, i, Q), unit_vector(b.dim, j, Q)));
        std::vector<Scalar> rhs = b.mul(rho.apply(unit_vector(b.dim, i, Q)), rho.apply(unit_vector(b.dim, j, Q)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("translation on the Z_2 smash swaps the vertices and arrows") {
  GradedStructure gs = graded(loop_square_presentation(Q), Q, FiniteGroup::cyclic(2));
  SmashProduct sp = smash_product(gs);
  ExactMatrix rho = sp.group_translate(1);
  CHECK(rho.apply(sp.p_idempotent(0)) == sp.p_idempotent(1));
  CHECK(rho.apply(sp.p_idempotent(1)) == sp.p_idempotent(0));
  std::vector<Scalar> xp0 = unit_vector(4, sp.index(1, 0), Q);
  std::vector<Scalar> xp1 = unit_vector(4, sp.index(1, 1), Q);
  CHECK(rho.apply(xp0) == xp1);
  CHECK(rho.apply(xp1) == xp0);
}

TEST_CASE("twisting modules by translations") {
  GradedStructure gs = graded(loop_square_presentation(Q), Q, FiniteGroup::cyclic(2));
  SmashProduct sp = smash_product(gs);
  FDModule s0 = one_dim_smash_simple(sp, 0);
  FDModule s1 = one_dim_smash_simple(sp, 1);
  REQUIRE(validate_module(s0).ok);
  REQUIRE(validate_module(s1).ok);
  // twist by the identity is bit-identical
  FDModule t0 = twist_module(sp, s0, 0);
  CHECK(t0.action == s0.action);
  // twist by the generator exchanges the two simples
  FDModule t1 = twist_module(sp, s0, 1);
  CHECK(t1.action == s1.action);
  // twist(twist(N, x), y) equals twist(N, yx) on the regular module
  FDModule reg = regular_module(sp.algebra);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      FDModule lhs = twist_module(sp, twist_module(sp, reg, x), y);
      FDModule rhs = twist_module(sp, reg, sp.group.mul(y, x));
      CHECK(lhs.action == rhs.action);
    }
}

TEST_CASE("smashes of all graded fixtures pass check_algebra") {
  for (const GradedStructure& gs :
       {graded(loop_square_presentation(Q), Q, FiniteGroup::cyclic(2)),
        graded(a2_presentation(), Q, FiniteGroup::cyclic(2)),
        graded(kronecker_presentation(), Q, FiniteGroup::cyclic(2)),
        graded(exterior_presentation(1, Q), Q, FiniteGroup::cyclic(2))}) {
    REQUIRE(validate_grading(gs).ok);
    CHECK(check_algebra(*smash_product(gs).algebra).ok);
  }
}
