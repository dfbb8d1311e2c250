#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/lie_algebra.hpp"

namespace liesym {

// Fundamental group data: π₁ ≅ ℤ^free_rank × ∏ ℤ/t.
struct Pi1Descriptor {
  int free_rank = 0;
  std::vector<int> torsion;  // each entry ≥ 2

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const Pi1Descriptor&) const = default;
};

std::string pi1_to_text(const Pi1Descriptor& pi1);

// A named Lie group: its algebra plus the topological metadata the
// classification consumes but cannot compute.
struct GroupDescriptor {
  std::string name;          // canonical invocation, e.g. "galilei(3)"
  std::string display_name;  // e.g. "SU(2)"; equals name unless a nicer form exists
  ValidatedAlgebra algebra;
  bool simply_connected = false;
  Pi1Descriptor pi1;
  std::optional<std::string> universal_cover_name;
  std::string notes;  // includes the literature source for the π₁/cover data
};

struct RegistryEntry {
  std::string name;
  std::string params;  // parameter signature, e.g. "n", "1,3", ""
  std::string description;
};

// "ℝ" + superscript digits, e.g. 12 → "ℝ¹²".  Used for cover names.
std::string reals_to_power(int n);

namespace registry {

// Builders for: so(n) n≥3, su2, lorentz(1,3), poincare(1,3), galilei(d) d≥2,
// euclidean(2), heisenberg(n), abelian(n), torus(n).
GroupDescriptor build(const std::string& name, const std::vector<int>& params);

// Accepts "name", "name(p)" or "name(p,q)".
GroupDescriptor build(const std::string& invocation);

// Stable (alphabetical) listing of the available families.
std::vector<RegistryEntry> list();

}  // namespace registry

}  // namespace liesym
