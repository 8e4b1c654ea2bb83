#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsmash/homalg.hpp"
#include "gsmash/lattice.hpp"
#include "test_util.hpp"

using namespace gsmash;
using namespace gsmash::testutil;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AlgebraPtr kronecker_algebra() {
  return std::make_shared<StructureAlgebra>(load_quiver_algebra(kronecker_presentation(), Q).algebra);
}

// e1 -> diag(1,0), e2 -> diag(0,1), a -> E21, b -> x E21
Lattice1D kronecker_lattice(AlgebraPtr alg) {
  Lattice1D l;
  l.algebra = alg;
  l.rank = 2;
  PolyMatrix e1 = zero_poly_matrix(2, 2, Q), e2 = zero_poly_matrix(2, 2, Q);
  e1(0, 0) = Poly::one(Q);
  e2(1, 1) = Poly::one(Q);
  PolyMatrix a = zero_poly_matrix(2, 2, Q), b = zero_poly_matrix(2, 2, Q);
  a(1, 0) = Poly::one(Q);
  b(1, 0) = Poly::indeterminate(Q);
  l.action = {e1, e2, a, b};
  return l;
}

// canonical inclusion/projection of the probe's short exact sequence
ExactMatrix probe_inclusion(std::size_t m) {
  ExactMatrix incl = zero_matrix(2 * m, m, Q);
  for (std::size_t i = 0; i < m; ++i) incl(i, i) = Scalar::one(Q);
  return incl;
}

ExactMatrix probe_projection(std::size_t m) {
  ExactMatrix proj = zero_matrix(m, 2 * m, Q);
  for (std::size_t i = 0; i < m; ++i) proj(i, m + i) = Scalar::one(Q);
  return proj;
}

}  // namespace

TEST_CASE("lattice validation") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D l = kronecker_lattice(alg);
  CHECK(validate_lattice(l).ok);
  // constant lattice from a module always validates
  FDModule p1 = indecomposable_projectives(alg)[0];
  CHECK(validate_lattice(constant_lattice(p1)).ok);
  // breaking the vertex idempotent breaks the polynomial identities
  Lattice1D broken = l;
  broken.action[0](1, 1) = Poly::one(Q);
  CheckReport r = validate_lattice(broken);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("identity") != std::string::npos);
}

TEST_CASE("fibers of the Kronecker lattice") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D l = kronecker_lattice(alg);
  FDModule at0 = fiber(l, Scalar::of_int(0, Q));
  REQUIRE(validate_module(at0).ok);
  CHECK(at0.action[2](1, 0) == Scalar::one(Q));
  CHECK(at0.action[3](1, 0).is_zero());
  FDModule at3 = fiber(l, Scalar::of_int(3, Q));
  CHECK(at3.action[3](1, 0) == Scalar::of_int(3, Q));
  CHECK(is_indecomposable(at3));
  // constant lattice: fiber is the module itself at every point
  FDModule p1 = indecomposable_projectives(alg)[0];
  FDModule f = fiber(constant_lattice(p1), Scalar::of_int(7, Q));
  CHECK(f.action == p1.action);
}

TEST_CASE("probe on a constant lattice splits everywhere") {
  AlgebraPtr alg = kronecker_algebra();
  FDModule p1 = indecomposable_projectives(alg)[0];
  Lattice1D c = constant_lattice(p1);
  for (long x : {0, 1, 5}) {
    ExtClassProbe probe = family_ext_probe(c, Scalar::of_int(x, Q));
    CHECK_FALSE(probe.nonzero);
    REQUIRE(validate_module(probe.middle).ok);
  }
  CHECK_FALSE(generic_probe_nonzero(c));
}

TEST_CASE("probe over a semisimple algebra is zero even for nonconstant lattices") {
  StructureAlgebra kxk;
  kxk.field = Q;
  kxk.dim = 2;
  kxk.basis_labels = {"u", "v"};
  kxk.constants.assign(8, Scalar::zero(Q));
  kxk.c(0, 0, 0) = Scalar::one(Q);
  kxk.c(1, 1, 1) = Scalar::one(Q);
  kxk.unit = {Scalar::one(Q), Scalar::one(Q)};
  auto alg = std::make_shared<StructureAlgebra>(kxk);
  Lattice1D l;
  l.algebra = alg;
  l.rank = 2;
  PolyMatrix u = zero_poly_matrix(2, 2, Q);
  u(0, 0) = Poly::one(Q);
  u(0, 1) = Poly::indeterminate(Q);
  PolyMatrix v = zero_poly_matrix(2, 2, Q);
  v(1, 1) = Poly::one(Q);
  v(0, 1) = -Poly::indeterminate(Q);
  l.action = {u, v};
  REQUIRE(validate_lattice(l).ok);
  for (long x : {0, 2}) CHECK_FALSE(family_ext_probe(l, Scalar::of_int(x, Q)).nonzero);
  CHECK_FALSE(generic_probe_nonzero(l));
}

TEST_CASE("Kronecker probe is nonzero and matches the resolution-based class") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D l = kronecker_lattice(alg);
  for (long x : {0, 1, 4}) {
    ExtClassProbe probe = family_ext_probe(l, Scalar::of_int(x, Q));
    CHECK(probe.nonzero);
    bool zero_class = extension_class_is_zero(probe.fiber_module, probe.middle, probe.fiber_module,
                                              probe_inclusion(l.rank), probe_projection(l.rank));
    CHECK(zero_class == !probe.nonzero);
  }
}

TEST_CASE("jet middle agrees with the companion-matrix tensor construction") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D kron = kronecker_lattice(alg);
  FDModule p1 = indecomposable_projectives(alg)[0];
  Lattice1D consts = constant_lattice(p1);
  for (const Lattice1D* l : {&kron, &consts}) {
    for (long x : {0, 2}) {
      Scalar alpha = Scalar::of_int(x, Q);
      FDModule jet = jet_middle_module(*l, alpha);
      Poly lin = Poly::from_coeffs(Q, {-alpha, Scalar::one(Q)});
      FDModule comp = tensor_with_poly_quotient(*l, lin * lin);
      REQUIRE(validate_module(jet).ok);
      REQUIRE(validate_module(comp).ok);
      CHECK(jet.dim == comp.dim);
      CHECK(is_isomorphic(jet, comp));
    }
  }
}

TEST_CASE("probe nonzero means the middle is not fiber + fiber") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D l = kronecker_lattice(alg);
  ExtClassProbe probe = family_ext_probe(l, Scalar::of_int(0, Q));
  REQUIRE(probe.nonzero);
  CHECK_FALSE(is_isomorphic(probe.middle, direct_sum(probe.fiber_module, probe.fiber_module)));
}

TEST_CASE("scans and the generic certificate") {
  AlgebraPtr alg = kronecker_algebra();
  Lattice1D l = kronecker_lattice(alg);
  std::vector<Scalar> pts = default_sample_points(Q, 20);
  REQUIRE(pts.size() == 20);
  CHECK(o1_scan(l, pts).size() == 20);
  CHECK(generic_probe_nonzero(l));
  FDModule p1 = indecomposable_projectives(alg)[0];
  CHECK(o1_scan(constant_lattice(p1), pts).empty());
}

TEST_CASE("nilpotent-loop lattices have vanishing generic probe") {
  auto alg = std::make_shared<StructureAlgebra>(load_quiver_algebra(loop_square_presentation(Q), Q).algebra);
  // rank 1: the loop must act as zero identically
  Lattice1D rank1;
  rank1.algebra = alg;
  rank1.rank = 1;
  rank1.action = {PolyMatrix::identity(1, Poly::zero(Q), Poly::one(Q)), zero_poly_matrix(1, 1, Q)};
  REQUIRE(validate_lattice(rank1).ok);
  CHECK_FALSE(generic_probe_nonzero(rank1));
  // rank 2 with the loop acting as x E12: fibers away from 0 are free
  Lattice1D rank2;
  rank2.algebra = alg;
  rank2.rank = 2;
  PolyMatrix loop = zero_poly_matrix(2, 2, Q);
  loop(0, 1) = Poly::indeterminate(Q);
  rank2.action = {PolyMatrix::identity(2, Poly::zero(Q), Poly::one(Q)), loop};
  REQUIRE(validate_lattice(rank2).ok);
  CHECK_FALSE(generic_probe_nonzero(rank2));
}

TEST_CASE("lattice pull-up and push-down") {
  GradedStructure gs = graded(kronecker_presentation(), Q, FiniteGroup::cyclic(2));
  REQUIRE(validate_grading(gs).ok);
  SmashProduct sp = smash_product(gs);
  Lattice1D l = kronecker_lattice(gs.algebra);
  Lattice1D up = lattice_pull_up(sp, l);
  CHECK(up.rank == 4);
  CHECK(validate_lattice(up).ok);
  Lattice1D down = lattice_push_down(sp, up);
  CHECK(down.rank == 4);
  CHECK(validate_lattice(down).ok);
  for (long x : {0, 3}) {
    Scalar alpha = Scalar::of_int(x, Q);
    CHECK(is_isomorphic(fiber(up, alpha), pull_up(sp, fiber(l, alpha))));
    CHECK(is_isomorphic(fiber(down, alpha), push_down(sp, fiber(up, alpha))));
  }
}

TEST_CASE("transfer inclusions hold on the graded Kronecker") {
  GradedStructure gs = graded(kronecker_presentation(), Q, FiniteGroup::cyclic(2));
  SmashProduct sp = smash_product(gs);
  Lattice1D l = kronecker_lattice(gs.algebra);
  std::vector<Scalar> pts = default_sample_points(Q, 6);
  REQUIRE(separable_grading_solve(gs).has_value());
  TransferReport up = transfer_direction_up(sp, l, pts, true);
  CHECK(up.ok);
  CHECK_FALSE(up.generic_violation);
  TransferReport down = transfer_direction_down(sp, lattice_pull_up(sp, l), pts, true);
  CHECK(down.ok);
  // trivial group: transfer is an equality
  GradedStructure triv = graded_trivially(kronecker_presentation(), Q);
  SmashProduct sp1 = smash_product(triv);
  Lattice1D l1 = kronecker_lattice(triv.algebra);
  TransferReport eq = transfer_direction_up(sp1, l1, pts, false);
  for (const TransferPointResult& r : eq.points) CHECK(r.before == r.after);
}
