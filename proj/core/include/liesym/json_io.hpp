#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liesym/classifier.hpp"
#include "liesym/cochains.hpp"
#include "liesym/cohomology.hpp"
#include "liesym/extensions.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/registry.hpp"
#include "liesym/verify.hpp"

namespace liesym {

using Json = nlohmann::ordered_json;

// Raw algebra plus the topological metadata keys that may ride along with it,
// so that `registry show` output feeds back into every consumer unchanged.
struct AlgebraEnvelope {
  LieAlgebra algebra;
  std::optional<Pi1Descriptor> pi1;
  std::optional<bool> simply_connected;
  std::optional<std::string> universal_cover;
};

// {"name", "dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
// with 0-based indices.  Emission writes the stored i < j half only.
Json algebra_to_json(const LieAlgebra& L);

// Strict parse: unknown keys are rejected (the envelope keys "pi1",
// "simply_connected", "universal_cover" excepted).  Bracket entries may give
// either or both antisymmetric halves; giving both triggers a consistency
// check.  Throws ParseError naming the offending path.
AlgebraEnvelope algebra_from_json(const Json& j);

// {"free_rank": int, "torsion": [int...]}
Json pi1_to_json(const Pi1Descriptor& pi1);
Pi1Descriptor pi1_from_json(const Json& j);

// Algebra JSON plus "pi1", "simply_connected", "universal_cover".
Json descriptor_to_json(const GroupDescriptor& G);

// [{"i": int, "j": int, "value": "p/q"}...], nonzero cells only.
Json two_cochain_to_json(const TwoCochain& om);
TwoCochain two_cochain_from_json(const Json& j, int n);

// Cocycle payload accepted by `extend`: either a bare cell array (a single
// cocycle) or an `h2` output object, whose "representatives" are all taken
// when `all` is set and must be a single one otherwise.
std::vector<TwoCochain> cocycles_from_json(const Json& j, int n, bool all);

// {"dim_Z2", "dim_B2", "dim_H2", "representatives": [[cells]...]}
Json h2_to_json(const CohomologyBasis& basis);

// Algebra JSON plus {"central_indices": [int...]}.
Json extended_to_json(const ExtendedAlgebra& E);

// {"ok": bool, "violations": [{"i","j","k","residual": {"k": "p/q"}}...]}
Json jacobi_report_to_json(const JacobiReport& report);

// {"case", "dim_H2", "pi1", "enlarged", "narrative"}
Json verdict_to_json(const EnlargementVerdict& v);

// {"checks": [{"name", "pass", "max_residual"}...]}
Json check_report_to_json(const verify::CheckReport& report);

// nlohmann parse wrapped to rethrow as ParseError, prefixed with `origin`
// (a file name or "stdin"); the message carries the byte position.
Json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace liesym
