#pragma once

#include <random>
#include <vector>

#include "liesym/cochains.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/rational_linalg.hpp"

namespace liesym::testutil {

inline Rational random_rational(std::mt19937_64& rng, int num_max = 6, int den_max = 4) {
  std::uniform_int_distribution<int> num(-num_max, num_max);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline RVector random_vector(std::mt19937_64& rng, int n) {
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_rational(rng);
  return v;
}

inline RMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  }
  return m;
}

inline RMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    RMatrix s = random_matrix(rng, n, n);
    if (rref(s).rank() == n) return s;
  }
}

inline TwoCochain random_two_cochain(std::mt19937_64& rng, int n) {
  TwoCochain om(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) om.set(i, j, random_rational(rng));
  }
  return om;
}

// Solvable algebra [e1,e2] = e3, [e1,e3] = e3: the smallest case where the
// cocycle condition has teeth (ω(e2,e3) ≠ 0 fails it).
inline LieAlgebra solvable3() {
  LieAlgebra::BracketMap c;
  RVector v = RVector::Zero(3);
  v(2) = 1;
  c[{0, 1}] = v;
  c[{0, 2}] = v;
  return LieAlgebra("solv3", {"e1", "e2", "e3"}, std::move(c));
}

// Structure constants that violate the Jacobi identity: [a,b] = c,
// [a,c] = a, [b,c] = b has cyclic sum at (a,b,c) equal to −2c.
inline LieAlgebra broken3() {
  LieAlgebra::BracketMap c;
  RVector ab = RVector::Zero(3), ac = RVector::Zero(3), bc = RVector::Zero(3);
  ab(2) = 1;
  ac(0) = 1;
  bc(1) = 1;
  c[{0, 1}] = ab;
  c[{0, 2}] = ac;
  c[{1, 2}] = bc;
  return LieAlgebra("broken3", {"a", "b", "c"}, std::move(c));
}

}  // namespace liesym::testutil
