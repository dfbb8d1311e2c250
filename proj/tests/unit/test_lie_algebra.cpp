#include <doctest.h>

#include <random>

#include "liesym/errors.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/registry.hpp"

#include "helpers.hpp"

using namespace liesym;

namespace {

ValidatedAlgebra so3() { return registry::build("so", {3}).algebra; }

}  // namespace

TEST_CASE("constructor rejects malformed structure constants") {
  CHECK_THROWS_AS(LieAlgebra("empty", {}, {}), BadDimension);

  RVector v = RVector::Zero(2);
  v(0) = 1;
  LieAlgebra::BracketMap swapped;
  swapped[{1, 0}] = v;
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, swapped), BadParams);

  LieAlgebra::BracketMap diag;
  diag[{1, 1}] = v;
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, diag), BadParams);

  LieAlgebra::BracketMap range;
  range[{0, 5}] = v;
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, range), BadParams);

  LieAlgebra::BracketMap wrong;
  wrong[{0, 1}] = RVector::Zero(3);
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, wrong), DimensionMismatch);

  // A zero bracket vector is dropped rather than stored.
  LieAlgebra::BracketMap zero;
  zero[{0, 1}] = RVector::Zero(2);
  CHECK(LieAlgebra("x", {"a", "b"}, zero).brackets().empty());
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  const ValidatedAlgebra L = registry::build("galilei", {3}).algebra;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const RVector x = testutil::random_vector(rng, L->dim());
    const RVector y = testutil::random_vector(rng, L->dim());
    const RVector z = testutil::random_vector(rng, L->dim());
    const Rational a = testutil::random_rational(rng);
    CHECK(L->bracket(x, y) == RVector(-L->bracket(y, x)));
    CHECK(L->bracket(x, x) == RVector::Zero(L->dim()));
    const RVector lhs = L->bracket(RVector(a * x + y), z);
    const RVector rhs = a * L->bracket(x, z) + L->bracket(y, z);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("structure constants match ad matrices") {
  const ValidatedAlgebra L = so3();
  for (int i = 0; i < 3; ++i) {
    const RMatrix adi = L->ad(i);
    for (int j = 0; j < 3; ++j) {
      const RVector bij = L->bracket_basis(i, j);
      for (int k = 0; k < 3; ++k) {
        CHECK(adi(k, j) == bij(k));
        CHECK(L->structure_constant(k, i, j) == bij(k));
        CHECK(L->structure_constant(k, j, i) == Rational(-bij(k)));
      }
    }
  }
}

TEST_CASE("jacobi_check flags the broken example with its residual") {
  const JacobiReport ok = jacobi_check(testutil::solvable3());
  CHECK(ok.ok);
  CHECK(ok.violations.empty());

  const JacobiReport bad = jacobi_check(testutil::broken3());
  REQUIRE(!bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].i == 0);
  CHECK(bad.violations[0].j == 1);
  CHECK(bad.violations[0].k == 2);
  RVector expected = RVector::Zero(3);
  expected(2) = Rational(-2);
  CHECK(bad.violations[0].residual == expected);

  CHECK_THROWS_AS(ValidatedAlgebra::validate(testutil::broken3()), BadParams);
}

TEST_CASE("killing form of so(3) is -2I") {
  const ValidatedAlgebra L = so3();
  const RMatrix k = killing_form(L);
  CHECK(k == RMatrix(Rational(-2) * RMatrix::Identity(3, 3)));
  CHECK(symmetric_inertia(k) == Inertia{0, 3, 0});
}

TEST_CASE("semisimplicity by the Cartan criterion") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(is_semisimple(registry::build("so", {n}).algebra));
  }
  CHECK(is_semisimple(registry::build("lorentz", {1, 3}).algebra));
  CHECK(!is_semisimple(registry::build("galilei", {3}).algebra));
  CHECK(!is_semisimple(registry::build("poincare", {1, 3}).algebra));
  CHECK(!is_semisimple(registry::build("heisenberg", {2}).algebra));
  CHECK(!is_semisimple(registry::build("abelian", {3}).algebra));
}

TEST_CASE("center and derived subalgebra on known algebras") {
  CHECK(center(so3()).empty());
  CHECK(derived_subalgebra(so3()).size() == 3);

  const ValidatedAlgebra heis = registry::build("heisenberg", {1}).algebra;
  const auto z = center(heis);
  REQUIRE(z.size() == 1);
  RVector zgen = RVector::Zero(3);
  zgen(2) = 1;
  CHECK(z[0] == zgen);
  CHECK(derived_subalgebra(heis).size() == 1);

  const ValidatedAlgebra ab = registry::build("abelian", {4}).algebra;
  CHECK(center(ab).size() == 4);
  CHECK(derived_subalgebra(ab).empty());

  // Galilei(3): brackets reach J, K, P but never H.
  const ValidatedAlgebra gal = registry::build("galilei", {3}).algebra;
  CHECK(center(gal).empty());
  CHECK(derived_subalgebra(gal).size() == 9);
}

TEST_CASE("transform_basis preserves structural invariants") {
  std::mt19937_64 rng(5);
  const ValidatedAlgebra L = so3();
  for (int trial = 0; trial < 10; ++trial) {
    const RMatrix s = testutil::random_invertible(rng, 3);
    const ValidatedAlgebra M = transform_basis(L, s);
    CHECK(is_semisimple(M));
    CHECK(symmetric_inertia(killing_form(M)) == Inertia{0, 3, 0});
    CHECK(center(M).empty());
  }
  RMatrix sing = RMatrix::Zero(3, 3);
  CHECK_THROWS_AS(transform_basis(L, sing), SingularMatrix);
}

TEST_CASE("transform_basis is functorial for the bracket") {
  std::mt19937_64 rng(23);
  const ValidatedAlgebra L = registry::build("galilei", {2}).algebra;
  const int n = L->dim();
  const RMatrix s = testutil::random_invertible(rng, n);
  const RMatrix si = inverse(s);
  const ValidatedAlgebra M = transform_basis(L, s);
  for (int trial = 0; trial < 10; ++trial) {
    const RVector x = testutil::random_vector(rng, n);
    const RVector y = testutil::random_vector(rng, n);
    // [x,y] in the new coordinates = S^{-1} [Sx, Sy] in the old ones.
    const RVector lhs = M->bracket(x, y);
    const RVector rhs = si * L->bracket(RVector(s * x), RVector(s * y));
    CHECK(lhs == rhs);
  }
}
