#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <optional>
#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Rank via fraction-free Bareiss elimination on an integer copy of the matrix
// (each row is scaled by its denominator lcm first).
Eigen::Index bareiss_rank(const RMatrix& m);

struct Rref {
  RMatrix mat;
  std::vector<Eigen::Index> pivot_cols;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

// Reduced row echelon form over the rationals (exact Gauss-Jordan).
Rref rref(const RMatrix& m);

// Columns span the kernel of m. Empty (cols x 0) matrix when the kernel is trivial.
RMatrix nullspace(const RMatrix& m);

// Same, from an already-computed RREF of a matrix with `cols` columns.
RMatrix nullspace(const Rref& r, Eigen::Index cols);

// Solution of a*x = b, or nullopt if the system is inconsistent.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

// Inverse of a square matrix; throws SingularMatrix if not invertible.
RMatrix inverse(const RMatrix& m);

struct Inertia {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;

  bool operator==(const Inertia&) const = default;
};

// Signature of a symmetric matrix, computed exactly by congruence
// diagonalization (Sylvester's law of inertia).
Inertia symmetric_inertia(RMatrix m);

}  // namespace liesym
