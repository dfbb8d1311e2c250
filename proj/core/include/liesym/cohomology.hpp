#pragma once

#include <optional>
#include <vector>

#include "liesym/cochains.hpp"
#include "liesym/lie_algebra.hpp"

namespace liesym {

// Chevalley–Eilenberg differentials in degrees 1 and 2, with the cyclic-sum
// sign convention:
//   (d1 Λ)(x, y)    = −Λ([x, y])
//   (d2 ω)(x, y, z) = −ω([x,y], z) + ω([x,z], y) − ω([y,z], x)
// so that d2 ∘ d1 = 0 by the Jacobi identity.

TwoCochain d1(const ValidatedAlgebra& L, const OneCochain& lam);
ThreeCochain d2(const ValidatedAlgebra& L, const TwoCochain& om);

// Matrix of d1 : ∧¹ → ∧², shape C(n,2) × n.
RMatrix d1_matrix(const ValidatedAlgebra& L);
// Matrix of d2 : ∧² → ∧³, shape C(n,3) × C(n,2).
RMatrix d2_matrix(const ValidatedAlgebra& L);

bool is_cocycle(const ValidatedAlgebra& L, const TwoCochain& om);

// Λ with d1 Λ = ω, or nullopt if ω is not exact. Throws NotACocycle when
// d2 ω ≠ 0.
std::optional<OneCochain> is_coboundary(const ValidatedAlgebra& L, const TwoCochain& om);

// Λ with ω2 − ω1 = d1 Λ, or nullopt when the classes differ. Both inputs must
// be cocycles (NotACocycle otherwise).
std::optional<OneCochain> are_cohomologous(const ValidatedAlgebra& L, const TwoCochain& om1,
                                           const TwoCochain& om2);

struct CohomologyBasis {
  int dim_Z2 = 0;
  int dim_B2 = 0;
  int dim_H2 = 0;
  // Cocycles completing a basis of B² to a basis of Z², in reduced canonical
  // form under the lexicographic ∧² coordinate order. Linearly independent
  // modulo coboundaries.
  std::vector<TwoCochain> representatives;
};

CohomologyBasis h2(const ValidatedAlgebra& L);

}  // namespace liesym
