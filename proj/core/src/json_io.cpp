#include "liesym/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) fail(path + "." + item.key(), "unknown key");
  }
}

const Json& expect_member(const Json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

long expect_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Rational expect_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational as a string \"p/q\" or \"p\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

int expect_index(const Json& j, const std::string& path, int n) {
  const long v = expect_int(j, path);
  if (v < 0 || v >= n) {
    fail(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  }
  return static_cast<int>(v);
}

int parse_coeff_key(const std::string& key, const std::string& path, int n) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(path, "coefficient key \"" + key + "\" is not a basis index");
  }
  const long v = std::stol(key);
  if (v >= n) fail(path, "index " + key + " out of range [0, " + std::to_string(n) + ")");
  return static_cast<int>(v);
}

Json coeffs_to_json(const RVector& v) {
  Json out = Json::object();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) != 0) out[std::to_string(k)] = format_rational(v(k));
  }
  return out;
}

}  // namespace

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  Json brackets = Json::array();
  for (const auto& [key, vec] : L.brackets()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["coeffs"] = coeffs_to_json(vec);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

AlgebraEnvelope algebra_from_json(const Json& j) {
  const std::string root = "$";
  if (!j.is_object()) fail(root, "expected an object");
  expect_keys(j, root, {"name", "dim", "basis", "brackets", "pi1", "simply_connected",
                        "universal_cover"});

  const std::string name = expect_string(expect_member(j, root, "name"), root + ".name");
  const long dim = expect_int(expect_member(j, root, "dim"), root + ".dim");
  if (dim < 1) fail(root + ".dim", "dimension must be positive");

  const Json& basis = expect_member(j, root, "basis");
  if (!basis.is_array()) fail(root + ".basis", "expected an array of strings");
  std::vector<std::string> basis_names;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    basis_names.push_back(expect_string(basis[b], root + ".basis[" + std::to_string(b) + "]"));
  }
  if (static_cast<long>(basis_names.size()) != dim) {
    fail(root + ".basis", "holds " + std::to_string(basis_names.size()) +
                              " names but dim = " + std::to_string(dim));
  }
  const int n = static_cast<int>(dim);

  const Json& brackets = expect_member(j, root, "brackets");
  if (!brackets.is_array()) fail(root + ".brackets", "expected an array");

  // Entries may carry either orientation; track the halves separately so a
  // redundant file is checked for antisymmetric consistency.
  std::map<std::pair<int, int>, RVector> lower, upper;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = root + ".brackets[" + std::to_string(b) + "]";
    const Json& entry = brackets[b];
    if (!entry.is_object()) fail(path, "expected an object");
    expect_keys(entry, path, {"i", "j", "coeffs"});
    const int i = expect_index(expect_member(entry, path, "i"), path + ".i", n);
    const int jj = expect_index(expect_member(entry, path, "j"), path + ".j", n);
    if (i == jj) fail(path, "bracket [e_i, e_i] is identically zero; i and j must differ");

    const Json& coeffs = expect_member(entry, path, "coeffs");
    if (!coeffs.is_object()) fail(path + ".coeffs", "expected an object");
    RVector vec = RVector::Zero(n);
    for (const auto& item : coeffs.items()) {
      const std::string cpath = path + ".coeffs." + item.key();
      const int k = parse_coeff_key(item.key(), cpath, n);
      vec(k) = expect_rational(item.value(), cpath);
    }

    auto& half = i < jj ? lower : upper;
    const std::pair<int, int> key = i < jj ? std::make_pair(i, jj) : std::make_pair(jj, i);
    if (i > jj) vec = -vec;
    if (!half.emplace(key, vec).second) {
      fail(path, "duplicate bracket for pair (" + std::to_string(key.first) + ", " +
                     std::to_string(key.second) + ")");
    }
  }

  LieAlgebra::BracketMap merged = lower;
  for (const auto& [key, vec] : upper) {
    const auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, vec);
    } else if (it->second != vec) {
      fail(root + ".brackets", "brackets (" + std::to_string(key.first) + ", " +
                                   std::to_string(key.second) + ") and its swap violate " +
                                   "antisymmetry: the two halves disagree");
    }
  }

  AlgebraEnvelope env{LieAlgebra(name, std::move(basis_names), std::move(merged)), {}, {}, {}};

  if (const auto it = j.find("pi1"); it != j.end() && !it->is_null()) {
    env.pi1 = pi1_from_json(*it);
  }
  if (const auto it = j.find("simply_connected"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) fail(root + ".simply_connected", "expected a boolean");
    env.simply_connected = it->get<bool>();
  }
  if (const auto it = j.find("universal_cover"); it != j.end() && !it->is_null()) {
    env.universal_cover = expect_string(*it, root + ".universal_cover");
  }
  return env;
}

Json pi1_to_json(const Pi1Descriptor& pi1) {
  Json j;
  j["free_rank"] = pi1.free_rank;
  j["torsion"] = pi1.torsion;
  return j;
}

Pi1Descriptor pi1_from_json(const Json& j) {
  const std::string root = "$.pi1";
  if (!j.is_object()) fail(root, "expected an object");
  expect_keys(j, root, {"free_rank", "torsion"});
  Pi1Descriptor out;
  const long rank = expect_int(expect_member(j, root, "free_rank"), root + ".free_rank");
  if (rank < 0) fail(root + ".free_rank", "must be nonnegative");
  out.free_rank = static_cast<int>(rank);
  const Json& torsion = expect_member(j, root, "torsion");
  if (!torsion.is_array()) fail(root + ".torsion", "expected an array of integers");
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    const std::string path = root + ".torsion[" + std::to_string(t) + "]";
    const long v = expect_int(torsion[t], path);
    if (v < 2) fail(path, "torsion orders must be at least 2");
    out.torsion.push_back(static_cast<int>(v));
  }
  return out;
}

Json descriptor_to_json(const GroupDescriptor& G) {
  Json j = algebra_to_json(G.algebra.algebra());
  j["pi1"] = pi1_to_json(G.pi1);
  j["simply_connected"] = G.simply_connected;
  j["universal_cover"] = G.universal_cover_name ? Json(*G.universal_cover_name) : Json(nullptr);
  return j;
}

Json two_cochain_to_json(const TwoCochain& om) {
  Json cells = Json::array();
  const RVector& c = om.coords();
  for (Eigen::Index idx = 0; idx < c.size(); ++idx) {
    if (c(idx) == 0) continue;
    const auto [i, j] = pair_unindex(om.n(), idx);
    Json cell;
    cell["i"] = i;
    cell["j"] = j;
    cell["value"] = format_rational(c(idx));
    cells.push_back(std::move(cell));
  }
  return cells;
}

TwoCochain two_cochain_from_json(const Json& j, int n) {
  const std::string root = "$";
  if (!j.is_array()) fail(root, "expected an array of {\"i\", \"j\", \"value\"} cells");
  TwoCochain om(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string path = root + "[" + std::to_string(c) + "]";
    const Json& cell = j[c];
    if (!cell.is_object()) fail(path, "expected an object");
    expect_keys(cell, path, {"i", "j", "value"});
    const int a = expect_index(expect_member(cell, path, "i"), path + ".i", n);
    const int b = expect_index(expect_member(cell, path, "j"), path + ".j", n);
    if (a == b) fail(path, "antisymmetry forces the (i, i) cell to zero; i and j must differ");
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      fail(path, "duplicate cell for pair (" + std::to_string(std::min(a, b)) + ", " +
                     std::to_string(std::max(a, b)) + ")");
    }
    om.set(a, b, expect_rational(expect_member(cell, path, "value"), path + ".value"));
  }
  return om;
}

std::vector<TwoCochain> cocycles_from_json(const Json& j, int n, bool all) {
  if (j.is_array()) return {two_cochain_from_json(j, n)};
  const std::string root = "$";
  if (!j.is_object()) fail(root, "expected a cell array or an h2 report object");
  expect_keys(j, root, {"dim_Z2", "dim_B2", "dim_H2", "representatives"});
  const Json& reps = expect_member(j, root, "representatives");
  if (!reps.is_array()) fail(root + ".representatives", "expected an array");
  if (!all && reps.size() != 1) {
    fail(root + ".representatives",
         "holds " + std::to_string(reps.size()) +
             " cocycles; pass --all-h2 to use every representative, or supply a single one");
  }
  std::vector<TwoCochain> out;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    out.push_back(two_cochain_from_json(reps[r], n));
  }
  return out;
}

Json h2_to_json(const CohomologyBasis& basis) {
  Json j;
  j["dim_Z2"] = basis.dim_Z2;
  j["dim_B2"] = basis.dim_B2;
  j["dim_H2"] = basis.dim_H2;
  Json reps = Json::array();
  for (const TwoCochain& om : basis.representatives) reps.push_back(two_cochain_to_json(om));
  j["representatives"] = std::move(reps);
  return j;
}

Json extended_to_json(const ExtendedAlgebra& E) {
  Json j = algebra_to_json(E.algebra);
  j["central_indices"] = E.central_indices;
  return j;
}

Json jacobi_report_to_json(const JacobiReport& report) {
  Json j;
  j["ok"] = report.ok;
  Json violations = Json::array();
  for (const JacobiViolation& v : report.violations) {
    Json entry;
    entry["i"] = v.i;
    entry["j"] = v.j;
    entry["k"] = v.k;
    entry["residual"] = coeffs_to_json(v.residual);
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json verdict_to_json(const EnlargementVerdict& v) {
  Json j;
  j["case"] = to_string(v.case_id);
  j["dim_H2"] = v.h2.dim_H2;
  j["pi1"] = pi1_to_json(v.pi1);
  j["enlarged"] = extended_to_json(v.enl_algebra);
  j["narrative"] = explain(v);
  return j;
}

Json check_report_to_json(const verify::CheckReport& report) {
  Json checks = Json::array();
  for (const verify::Check& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["max_residual"] = c.max_residual;
    checks.push_back(std::move(entry));
  }
  Json j;
  j["checks"] = std::move(checks);
  return j;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

}  // namespace liesym
