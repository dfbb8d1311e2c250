#include <doctest.h>

#include <random>

#include "liesym/errors.hpp"
#include "liesym/rational_linalg.hpp"

#include "helpers.hpp"

using namespace liesym;
using testutil::random_matrix;
using testutil::random_vector;

TEST_CASE("parse_rational canonicalizes and validates") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  // signs live on the numerator only
  CHECK_THROWS_AS(parse_rational("3/-6"), ParseError);
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("+5/5") == Rational(1));
  CHECK(parse_rational("0/9") == Rational(0));
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(Rational(-7)) == "-7");

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("2 /4"), ParseError);
  CHECK_THROWS_AS(parse_rational("/4"), ParseError);
}

TEST_CASE("rref solves a known system exactly") {
  RMatrix m(3, 3);
  m << Rational(2), Rational(1), Rational(-1),
      Rational(-3), Rational(-1), Rational(2),
      Rational(-2), Rational(1), Rational(2);
  const Rref r = rref(m);
  CHECK(r.rank() == 3);

  RVector b(3);
  b << Rational(8), Rational(-11), Rational(-3);
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rational(2));
  CHECK((*x)(1) == Rational(3));
  CHECK((*x)(2) == Rational(-1));
  CHECK(m * *x == b);
}

TEST_CASE("solve reports inconsistent systems") {
  RMatrix m(2, 2);
  m << Rational(1), Rational(2), Rational(2), Rational(4);
  RVector b(2);
  b << Rational(1), Rational(3);
  CHECK(!solve(m, b).has_value());
  b(1) = Rational(2);
  CHECK(solve(m, b).has_value());
}

TEST_CASE("inverse round-trips and rejects singular input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RMatrix s = testutil::random_invertible(rng, 4);
    const RMatrix si = inverse(s);
    CHECK(s * si == RMatrix::Identity(4, 4));
    CHECK(si * s == RMatrix::Identity(4, 4));
  }
  RMatrix sing(2, 2);
  sing << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_THROWS_AS(inverse(sing), SingularMatrix);
}

TEST_CASE("rank-nullity holds on random rational matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const RMatrix m = random_matrix(rng, rows, cols);
    const Rref r = rref(m);
    const RMatrix k = nullspace(m);
    CHECK(r.rank() + k.cols() == cols);
    if (k.cols() > 0) {
      const RMatrix mk = m * k;
      for (Eigen::Index i = 0; i < mk.rows(); ++i) {
        for (Eigen::Index j = 0; j < mk.cols(); ++j) CHECK(mk(i, j) == 0);
      }
      CHECK(rref(k).rank() == k.cols());  // basis, not just a spanning set
    }
  }
}

TEST_CASE("bareiss and gauss-jordan ranks agree") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    RMatrix m = random_matrix(rng, rows, cols);
    if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0);  // force rank deficiency
    CHECK(bareiss_rank(m) == rref(m).rank());
  }
}

TEST_CASE("rref is idempotent and respects pivots") {
  std::mt19937_64 rng(17);
  const RMatrix m = random_matrix(rng, 5, 7);
  const Rref r1 = rref(m);
  const Rref r2 = rref(r1.mat);
  CHECK(r1.mat == r2.mat);
  CHECK(r1.pivot_cols == r2.pivot_cols);
  for (std::size_t p = 0; p < r1.pivot_cols.size(); ++p) {
    const Eigen::Index col = r1.pivot_cols[p];
    CHECK(r1.mat(static_cast<Eigen::Index>(p), col) == 1);
  }
}

TEST_CASE("symmetric_inertia on frozen diagonal and hyperbolic forms") {
  RMatrix d = RMatrix::Zero(3, 3);
  d(0, 0) = Rational(5);
  d(1, 1) = Rational(-1, 3);
  CHECK(symmetric_inertia(d) == Inertia{1, 1, 1});

  // No diagonal pivot available anywhere: the hyperbolic fallback must fire.
  RMatrix h = RMatrix::Zero(2, 2);
  h(0, 1) = Rational(1);
  h(1, 0) = Rational(1);
  CHECK(symmetric_inertia(h) == Inertia{1, 1, 0});

  RMatrix z = RMatrix::Zero(4, 4);
  CHECK(symmetric_inertia(z) == Inertia{0, 0, 4});

  RMatrix ns(2, 2);
  ns << Rational(0), Rational(1), Rational(2), Rational(0);
  CHECK_THROWS_AS(symmetric_inertia(ns), BadParams);
}

TEST_CASE("inertia is a congruence invariant") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    RMatrix a = random_matrix(rng, n, n);
    RMatrix sym = a + a.transpose();
    const Inertia before = symmetric_inertia(sym);
    const RMatrix s = testutil::random_invertible(rng, n);
    const Inertia after = symmetric_inertia(RMatrix(s.transpose() * sym * s));
    CHECK(before == after);
  }
}
