#pragma once

#include <optional>
#include <string>

#include "liesym/cohomology.hpp"
#include "liesym/extensions.hpp"
#include "liesym/registry.hpp"

namespace liesym {

// The four-way decision over (π₁ trivial?, dim H² = 0?).
enum class EnlargementCase {
  Identity,                 // π₁ trivial, H² = 0
  UniversalCover,           // π₁ nontrivial, H² = 0
  CentralExtension,         // π₁ trivial, H² ≠ 0
  CentralExtensionOfCover,  // both obstructions
};

std::string to_string(EnlargementCase c);

struct EnlargementVerdict {
  EnlargementCase case_id = EnlargementCase::Identity;
  CohomologyBasis h2;
  Pi1Descriptor pi1;
  // Always populated: zero central directions when dim_H2 = 0, in which case
  // the wrapped algebra is the base algebra itself.
  ExtendedAlgebra enl_algebra;
  std::string group_name;
  std::optional<std::string> cover_name;
  std::string enl_description;  // e.g. "ℝ¹ ⊕_ω ℝ⁴ ⋊ (ℝ³ ⋊ SU(2))"
  // Registry group whose fingerprint equals the enlarged algebra's. A
  // candidate match only — fingerprints are necessary, not sufficient.
  std::optional<std::string> named_match;
  std::string notes;
};

EnlargementVerdict classify(const GroupDescriptor& G);

// Deterministic narration of the verdict, citing the theorem that applies.
std::string explain(const EnlargementVerdict& v);

}  // namespace liesym
