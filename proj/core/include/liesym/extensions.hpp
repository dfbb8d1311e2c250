#pragma once

#include <string>
#include <vector>

#include "liesym/cohomology.hpp"
#include "liesym/lie_algebra.hpp"

namespace liesym {

// Central extension 𝔤 ⊕ ℝᵐ. The wrapped algebra is deliberately *raw*: it
// passes jacobi_check exactly when every twisting cochain was a cocycle, and
// callers probe that equivalence.
struct ExtendedAlgebra {
  LieAlgebra algebra;
  int base_dim = 0;
  std::vector<int> central_indices;  // the last m indices
};

// Bracket on the extension: ([x,y], ω₁(x,y), …, ω_m(x,y)); the new generators
// Z1..Zm commute with everything. The cochains need not be cocycles.
ExtendedAlgebra central_extend(const ValidatedAlgebra& L, const std::vector<TwoCochain>& cocycles);

// Drops the central coordinates, recovering the base structure constants.
LieAlgebra quotient_by_center_slice(const ExtendedAlgebra& E);

// Necessary-condition invariants for matching an algebra against named ones.
// Equal fingerprints do not certify isomorphism.
struct Fingerprint {
  int dim = 0;
  int dim_center = 0;
  int dim_derived = 0;
  Inertia killing_signature;
  int dim_H2 = 0;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const ValidatedAlgebra& L);

std::string to_string(const Fingerprint& f);

}  // namespace liesym
