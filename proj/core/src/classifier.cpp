#include "liesym/classifier.hpp"

#include <utility>
#include <vector>

#include "liesym/errors.hpp"

namespace liesym {

std::string to_string(EnlargementCase c) {
  switch (c) {
    case EnlargementCase::Identity:
      return "Identity";
    case EnlargementCase::UniversalCover:
      return "UniversalCover";
    case EnlargementCase::CentralExtension:
      return "CentralExtension";
    case EnlargementCase::CentralExtensionOfCover:
      return "CentralExtensionOfCover";
  }
  return "Identity";
}

namespace {

// Simply connected candidates for fingerprint matching: G_enl is always
// simply connected, so only these can legitimately name it.
std::vector<GroupDescriptor> match_candidates(int dim) {
  std::vector<GroupDescriptor> out;
  if (dim == 3) out.push_back(registry::build("su2"));
  if (dim >= 3 && dim % 2 == 1 && dim <= 41) {
    out.push_back(registry::build("heisenberg", {(dim - 1) / 2}));
  }
  if (dim >= 1 && dim <= 20) out.push_back(registry::build("abelian", {dim}));
  return out;
}

}  // namespace

EnlargementVerdict classify(const GroupDescriptor& G) {
  CohomologyBasis basis = h2(G.algebra);
  ExtendedAlgebra extended = central_extend(G.algebra, basis.representatives);
  EnlargementVerdict v{
      .case_id = EnlargementCase::Identity,
      .h2 = std::move(basis),
      .pi1 = G.pi1,
      .enl_algebra = std::move(extended),
      .group_name = G.display_name.empty() ? G.name : G.display_name,
      .cover_name = G.universal_cover_name,
      .notes = G.notes,
  };

  const bool pi1_trivial = G.pi1.trivial();
  const bool h2_zero = v.h2.dim_H2 == 0;
  v.case_id = pi1_trivial ? (h2_zero ? EnlargementCase::Identity : EnlargementCase::CentralExtension)
                          : (h2_zero ? EnlargementCase::UniversalCover
                                     : EnlargementCase::CentralExtensionOfCover);

  const std::string cover = v.cover_name.value_or("cover(" + v.group_name + ")");
  switch (v.case_id) {
    case EnlargementCase::Identity:
      v.enl_description = v.group_name;
      break;
    case EnlargementCase::UniversalCover:
      v.enl_description = cover;
      break;
    case EnlargementCase::CentralExtension:
      v.enl_description = reals_to_power(v.h2.dim_H2) + " ⊕_ω " + v.group_name;
      break;
    case EnlargementCase::CentralExtensionOfCover:
      v.enl_description = reals_to_power(v.h2.dim_H2) + " ⊕_ω " + cover;
      break;
  }

  // The representatives are genuine cocycles, so the extension validates.
  const ValidatedAlgebra enlarged = ValidatedAlgebra::validate(v.enl_algebra.algebra);
  const Fingerprint fp = fingerprint(enlarged);
  for (const auto& candidate : match_candidates(fp.dim)) {
    if (candidate.name == G.name) continue;  // a self-match carries no information
    if (fingerprint(candidate.algebra) == fp) {
      v.named_match = candidate.display_name;
      break;
    }
  }
  return v;
}

std::string explain(const EnlargementVerdict& v) {
  const std::string pi1 = pi1_to_text(v.pi1);
  const std::string m = std::to_string(v.h2.dim_H2);
  const std::string cover = v.cover_name.value_or("the universal cover of " + v.group_name);
  std::string text;
  switch (v.case_id) {
    case EnlargementCase::Identity:
      text = "π₁(" + v.group_name + ") is trivial and H²(𝔤,ℝ) = 0. By Bargmann's theorem every "
             "projective unitary representation of " + v.group_name +
             " lifts to a unitary representation; the enlarged group is " + v.group_name +
             " itself.";
      break;
    case EnlargementCase::UniversalCover:
      text = "π₁(" + v.group_name + ") = " + pi1 + " while H²(𝔤,ℝ) = 0. Over a simply connected "
             "group the identification H²_{es,gr}(G̃,U(1)) ≅ H²(𝔤,ℝ) leaves no obstruction, so "
             "projective representations of " + v.group_name +
             " lift to unitary representations of the universal cover " + cover +
             "; the enlarged group is " + v.enl_description + ".";
      break;
    case EnlargementCase::CentralExtension:
      text = "π₁(" + v.group_name + ") is trivial but dim H²(𝔤,ℝ) = " + m +
             ". Following Cassinelli's classification, projective representations correspond to "
             "unitary representations of a central extension of " + v.group_name +
             " itself: G_enl = " + v.enl_description + ". The extension is reported by ℝ" +
             (v.h2.dim_H2 == 1 ? "" : "ᵐ") + "; a U(1)-variant realizes the same algebra data.";
      break;
    case EnlargementCase::CentralExtensionOfCover:
      text = "π₁(" + v.group_name + ") = " + pi1 + " and dim H²(𝔤,ℝ) = " + m +
             ". Both obstructions are present, so Cassinelli's theorem applies: pass to the "
             "universal cover " + cover + " and take its central extension by the H² classes: "
             "G_enl = " + v.enl_description + ". The extension is reported by ℝ" +
             (v.h2.dim_H2 == 1 ? "" : "ᵐ") + "; a U(1)-variant realizes the same algebra data.";
      break;
  }
  if (v.named_match) {
    text += " Fingerprint candidate match (necessary conditions only, not certified isomorphic): " +
            *v.named_match + ".";
  }
  if (!v.notes.empty()) text += " Registry notes: " + v.notes;
  return text;
}

}  // namespace liesym
