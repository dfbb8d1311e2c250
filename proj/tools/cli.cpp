#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "liesym/classifier.hpp"
#include "liesym/cohomology.hpp"
#include "liesym/errors.hpp"
#include "liesym/extensions.hpp"
#include "liesym/group_cocycle.hpp"
#include "liesym/json_io.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/registry.hpp"
#include "liesym/verify.hpp"

namespace liesym::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

AlgebraEnvelope load_algebra(const std::string& path, std::istream& in) {
  return algebra_from_json(parse_json_text(slurp(path, in), path == "-" ? "stdin" : path));
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string format_combination(const RVector& v, const std::vector<std::string>& names) {
  std::string out;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) == 0) continue;
    const bool neg = v(k) < 0;
    const Rational mag = neg ? Rational(-v(k)) : v(k);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += format_rational(mag) + "*";
    out += names[static_cast<std::size_t>(k)];
  }
  return out.empty() ? "0" : out;
}

void print_brackets(std::ostream& out, const LieAlgebra& L) {
  const auto& names = L.basis_names();
  for (const auto& [key, vec] : L.brackets()) {
    out << "  [" << names[static_cast<std::size_t>(key.first)] << ", "
        << names[static_cast<std::size_t>(key.second)] << "] = " << format_combination(vec, names)
        << "\n";
  }
}

void print_cochain(std::ostream& out, const TwoCochain& om, const std::vector<std::string>& names) {
  bool first = true;
  const RVector& c = om.coords();
  for (Eigen::Index idx = 0; idx < c.size(); ++idx) {
    if (c(idx) == 0) continue;
    const auto [i, j] = pair_unindex(om.n(), idx);
    out << (first ? "" : ", ") << "ω(" << names[static_cast<std::size_t>(i)] << ", "
        << names[static_cast<std::size_t>(j)] << ") = " << format_rational(c(idx));
    first = false;
  }
  if (first) out << "0";
}

void print_checks(std::ostream& out, const verify::CheckReport& report) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (max residual " << std::scientific
        << std::setprecision(3) << c.max_residual << ")" << std::defaultfloat << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
}

GroupDescriptor build_descriptor(const std::string& name, const std::vector<int>& params) {
  if (!params.empty()) return registry::build(name, params);
  return registry::build(name);
}

Pi1Descriptor parse_pi1_flag(const std::string& text) {
  std::vector<long> nums;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      nums.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--pi1: \"" + token + "\" is not an integer (expected free_rank[,t1,t2,...])");
    }
  }
  if (nums.empty()) throw UsageError("--pi1: expected free_rank[,t1,t2,...]");
  if (nums[0] < 0) throw UsageError("--pi1: free rank must be nonnegative");
  Pi1Descriptor out;
  out.free_rank = static_cast<int>(nums[0]);
  for (std::size_t i = 1; i < nums.size(); ++i) {
    if (nums[i] < 2) throw UsageError("--pi1: torsion orders must be at least 2");
    out.torsion.push_back(static_cast<int>(nums[i]));
  }
  return out;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_validate(const std::string& file, const std::string& format, std::istream& in,
                 std::ostream& out) {
  const AlgebraEnvelope env = load_algebra(file, in);
  const JacobiReport report = jacobi_check(env.algebra);
  if (format == "json") {
    emit_json(out, jacobi_report_to_json(report));
  } else if (report.ok) {
    out << "ok: " << env.algebra.name() << " (dim " << env.algebra.dim()
        << ") satisfies the Jacobi identity\n";
  } else {
    const auto& names = env.algebra.basis_names();
    out << "FAIL: " << env.algebra.name() << " violates the Jacobi identity\n";
    for (const auto& v : report.violations) {
      out << "  cyclic sum at (" << names[static_cast<std::size_t>(v.i)] << ", "
          << names[static_cast<std::size_t>(v.j)] << ", " << names[static_cast<std::size_t>(v.k)]
          << ") = " << format_combination(v.residual, names) << "\n";
    }
  }
  return report.ok ? 0 : 1;
}

ValidatedAlgebra resolve_algebra(const std::string& group, const std::vector<int>& params,
                                 const std::string& file, std::istream& in) {
  if (!group.empty() && !file.empty()) {
    throw UsageError("give either a registry name or --file, not both");
  }
  if (!group.empty()) return build_descriptor(group, params).algebra;
  if (!file.empty()) return ValidatedAlgebra::validate(load_algebra(file, in).algebra);
  throw UsageError("give a registry name (e.g. galilei 3) or --file algebra.json");
}

int cmd_h2(const std::string& group, const std::vector<int>& params, const std::string& file,
           const std::string& format, std::istream& in, std::ostream& out) {
  const ValidatedAlgebra L = resolve_algebra(group, params, file, in);
  const CohomologyBasis basis = h2(L);
  if (format == "json") {
    emit_json(out, h2_to_json(basis));
    return 0;
  }
  out << "algebra: " << L->name() << " (dim " << L->dim() << ")\n";
  out << "dim Z2 = " << basis.dim_Z2 << ", dim B2 = " << basis.dim_B2
      << ", dim H2 = " << basis.dim_H2 << "\n";
  int r = 0;
  for (const TwoCochain& om : basis.representatives) {
    out << "  omega_" << ++r << ": ";
    print_cochain(out, om, L->basis_names());
    out << "\n";
  }
  return 0;
}

int cmd_extend(const std::string& algebra_file, const std::string& cocycle_file, bool all_h2,
               const std::string& format, std::istream& in, std::ostream& out, std::ostream& err) {
  if (algebra_file == "-" && cocycle_file == "-") {
    throw UsageError("--algebra and --cocycle cannot both read stdin");
  }
  const ValidatedAlgebra L = ValidatedAlgebra::validate(load_algebra(algebra_file, in).algebra);

  std::vector<TwoCochain> cocycles;
  if (cocycle_file.empty()) {
    if (!all_h2) throw UsageError("give --cocycle file.json, or --all-h2 to extend by every H2 class");
    cocycles = h2(L).representatives;
  } else {
    const Json cj = parse_json_text(slurp(cocycle_file, in),
                                    cocycle_file == "-" ? "stdin" : cocycle_file);
    cocycles = cocycles_from_json(cj, L->dim(), all_h2);
  }
  for (std::size_t c = 0; c < cocycles.size(); ++c) {
    if (!is_cocycle(L, cocycles[c])) {
      err << "check failed: cochain " << c + 1 << " of " << cocycles.size()
          << " violates the 2-cocycle condition; the extension would not be a Lie algebra\n";
      return 1;
    }
  }

  const ExtendedAlgebra E = central_extend(L, cocycles);
  if (format == "json") {
    emit_json(out, extended_to_json(E));
    return 0;
  }
  out << "extended " << L->name() << " by " << cocycles.size() << " central generator"
      << (cocycles.size() == 1 ? "" : "s") << " -> " << E.algebra.name() << " (dim "
      << E.algebra.dim() << ")\n";
  const auto& names = E.algebra.basis_names();
  for (const auto& [key, vec] : E.algebra.brackets()) {
    RVector central = RVector::Zero(vec.size());
    bool any = false;
    for (const int z : E.central_indices) {
      if (vec(z) != 0) {
        central(z) = vec(z);
        any = true;
      }
    }
    if (!any) continue;
    out << "  [" << names[static_cast<std::size_t>(key.first)] << ", "
        << names[static_cast<std::size_t>(key.second)]
        << "] += " << format_combination(central, names) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& group, const std::vector<int>& params, const std::string& file,
                 const std::string& pi1_flag, bool simply_connected, const std::string& format,
                 std::istream& in, std::ostream& out) {
  std::optional<GroupDescriptor> G;
  if (!group.empty() && !file.empty()) {
    throw UsageError("give either a registry name or --file, not both");
  }
  if (!group.empty()) {
    G = build_descriptor(group, params);
  } else if (!file.empty()) {
    AlgebraEnvelope env = load_algebra(file, in);
    std::optional<Pi1Descriptor> pi1;
    if (!pi1_flag.empty()) {
      pi1 = parse_pi1_flag(pi1_flag);
    } else if (simply_connected) {
      pi1 = Pi1Descriptor{};
    } else if (env.pi1) {
      pi1 = *env.pi1;
    } else if (env.simply_connected && *env.simply_connected) {
      pi1 = Pi1Descriptor{};
    }
    if (!pi1) {
      throw UsageError(
          "pi1 data is required: the fundamental group is an input to the classification, not "
          "derivable from structure constants; pass --pi1 free_rank[,t1,...] or "
          "--simply-connected");
    }
    const std::string name = env.algebra.name();
    G = GroupDescriptor{name,
                        name,
                        ValidatedAlgebra::validate(std::move(env.algebra)),
                        pi1->trivial(),
                        *pi1,
                        env.universal_cover,
                        "user-supplied algebra; pi1 taken from input"};
  } else {
    throw UsageError("give a registry name (e.g. galilei 3) or --file algebra.json");
  }

  const EnlargementVerdict v = classify(*G);
  if (format == "json") {
    emit_json(out, verdict_to_json(v));
    return 0;
  }
  out << "group: " << v.group_name << "\n";
  out << "pi1 = " << pi1_to_text(v.pi1) << ", dim H2 = " << v.h2.dim_H2 << "\n";
  out << "case: " << to_string(v.case_id) << "\n";
  out << "enlarged: " << v.enl_description << "\n";
  if (v.named_match) out << "candidate match: " << *v.named_match << "\n";
  out << explain(v) << "\n";
  return 0;
}

int cmd_registry_list(const std::string& format, std::ostream& out) {
  const auto entries = registry::list();
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json row;
      row["name"] = e.name;
      row["params"] = e.params;
      row["description"] = e.description;
      arr.push_back(std::move(row));
    }
    emit_json(out, arr);
    return 0;
  }
  for (const auto& e : entries) {
    out << "  " << std::left << std::setw(16)
        << (e.params.empty() ? e.name : e.name + "(" + e.params + ")") << " " << e.description
        << "\n";
  }
  return 0;
}

int cmd_registry_show(const std::string& group, const std::vector<int>& params,
                      const std::string& format, std::ostream& out) {
  const GroupDescriptor G = build_descriptor(group, params);
  if (format == "json") {
    emit_json(out, descriptor_to_json(G));
    return 0;
  }
  const LieAlgebra& L = G.algebra.algebra();
  out << "group: " << G.display_name << " (algebra " << L.name() << ", dim " << L.dim() << ")\n";
  out << "basis:";
  for (const auto& b : L.basis_names()) out << " " << b;
  out << "\n";
  print_brackets(out, L);
  out << "pi1 = " << pi1_to_text(G.pi1) << "\n";
  out << "simply connected: " << (G.simply_connected ? "yes" : "no") << "\n";
  if (G.universal_cover_name) out << "universal cover: " << *G.universal_cover_name << "\n";
  if (!G.notes.empty()) out << "notes: " << G.notes << "\n";
  return 0;
}

template <typename Scalar>
std::vector<Scalar> parse_element(const Json& j, const std::string& path);

template <>
std::vector<Rational> parse_element<Rational>(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    if (v.is_string()) {
      out.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.push_back(Rational(v.get<long>()));
    } else {
      throw ParseError(path + "[" + std::to_string(i) + "]: expected \"p/q\" or an integer");
    }
  }
  return out;
}

template <>
std::vector<double> parse_element<double>(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(path + "[" + std::to_string(i) + "]: expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

Json emit_element(const std::vector<Rational>& e) {
  Json arr = Json::array();
  for (const auto& v : e) arr.push_back(format_rational(v));
  return arr;
}

Json emit_element(const std::vector<double>& e) {
  Json arr = Json::array();
  for (const double v : e) arr.push_back(v);
  return arr;
}

// One product per line: [x, g1, y, g2] or {"x":..,"g1":..,"y":..,"g2":..}
// in, {"z":.., "g3":..} out.
template <typename Scalar>
int gstar_repl(const GroupLaw<Scalar>& law, std::istream& in, std::ostream& out) {
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string origin = "stdin line " + std::to_string(lineno);
    const Json j = parse_json_text(line, origin);
    GStarElement<Scalar> a, b;
    if (j.is_array() && j.size() == 4) {
      a.central = parse_element<Scalar>(j[0], origin + "[0]");
      a.group = parse_element<Scalar>(j[1], origin + "[1]");
      b.central = parse_element<Scalar>(j[2], origin + "[2]");
      b.group = parse_element<Scalar>(j[3], origin + "[3]");
    } else if (j.is_object()) {
      for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "x" && k != "g1" && k != "y" && k != "g2") {
          throw ParseError(origin + ": unknown key \"" + k + "\"");
        }
      }
      const auto member = [&](const char* k) -> const Json& {
        const auto it = j.find(k);
        if (it == j.end()) throw ParseError(origin + ": missing key \"" + std::string(k) + "\"");
        return *it;
      };
      a.central = parse_element<Scalar>(member("x"), origin + ".x");
      a.group = parse_element<Scalar>(member("g1"), origin + ".g1");
      b.central = parse_element<Scalar>(member("y"), origin + ".y");
      b.group = parse_element<Scalar>(member("g2"), origin + ".g2");
    } else {
      throw ParseError(origin + ": expected [x, g1, y, g2] or {\"x\",\"g1\",\"y\",\"g2\"}");
    }
    const GStarElement<Scalar> r = gstar_multiply(a, b, law);
    Json o;
    o["z"] = emit_element(r.central);
    o["g3"] = emit_element(r.group);
    out << o.dump() << "\n";
  }
  return 0;
}

int cmd_gstar(const std::string& group, int dim, std::istream& in, std::ostream& out) {
  if (group == "heisenberg") return gstar_repl(make_heisenberg_law(dim), in, out);
  if (group == "bargmann") return gstar_repl(make_bargmann_law(), in, out);
  throw UnknownGroup("gstar: unknown group \"" + group + "\" (known: heisenberg, bargmann)");
}

int cmd_verify(const verify::CheckReport& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    emit_json(out, check_report_to_json(report));
  } else {
    print_checks(out, report);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"liesym: exact Lie algebra cohomology, central extensions, and the symmetry "
               "enlargement that projective unitary representations force"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  // algebra validate
  auto* algebra_cmd = app.add_subcommand("algebra", "Operations on algebra JSON files");
  algebra_cmd->require_subcommand(1);
  auto* validate_cmd = algebra_cmd->add_subcommand("validate", "Check the Jacobi identity");
  std::string validate_file = "-";
  validate_cmd->add_option("--file", validate_file, "Algebra JSON ('-' = stdin)")
      ->capture_default_str();
  add_format(validate_cmd);

  // h2
  auto* h2_cmd = app.add_subcommand("h2", "Second Lie algebra cohomology H2(g, R)");
  std::string h2_group;
  std::vector<int> h2_params;
  std::string h2_file;
  h2_cmd->add_option("group", h2_group, "Registry name, e.g. galilei");
  h2_cmd->add_option("params", h2_params, "Integer parameters for the registry name");
  h2_cmd->add_option("--file", h2_file, "Algebra JSON ('-' = stdin)");
  add_format(h2_cmd);

  // extend
  auto* extend_cmd = app.add_subcommand("extend", "Central extension by explicit 2-cocycles");
  std::string extend_algebra;
  std::string extend_cocycle;
  bool extend_all = false;
  extend_cmd->add_option("--algebra", extend_algebra, "Algebra JSON ('-' = stdin)")->required();
  extend_cmd->add_option("--cocycle", extend_cocycle,
                         "Cocycle JSON: a cell array or an h2 report ('-' = stdin)");
  extend_cmd->add_flag("--all-h2", extend_all,
                       "Extend by every representative (computed when --cocycle is omitted)");
  add_format(extend_cmd);

  // gstar
  auto* gstar_cmd = app.add_subcommand(
      "gstar", "REPL for the G* product (x,g1).(y,g2) = (x+y+xi(g1,g2), g1.g2)");
  std::string gstar_group = "heisenberg";
  int gstar_dim = 1;
  gstar_cmd->add_option("--group", gstar_group, "heisenberg or bargmann")->capture_default_str();
  gstar_cmd->add_option("--dim", gstar_dim, "Heisenberg parameter n (elements in R^2n)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Decide the enlarged group from pi1(G) and H2(g, R)");
  std::string classify_group;
  std::vector<int> classify_params;
  std::string classify_file;
  std::string classify_pi1;
  bool classify_sc = false;
  classify_cmd->add_option("group", classify_group, "Registry name, e.g. galilei");
  classify_cmd->add_option("params", classify_params, "Integer parameters for the registry name");
  classify_cmd->add_option("--file", classify_file, "Algebra JSON ('-' = stdin)");
  classify_cmd->add_option("--pi1", classify_pi1,
                           "Fundamental group as free_rank[,t1,t2,...], e.g. 0,2 for Z/2");
  classify_cmd->add_flag("--simply-connected", classify_sc, "Declare pi1(G) trivial");
  add_format(classify_cmd);

  // registry
  auto* registry_cmd = app.add_subcommand("registry", "Built-in groups with curated pi1 data");
  registry_cmd->require_subcommand(1);
  auto* list_cmd = registry_cmd->add_subcommand("list", "List the available families");
  add_format(list_cmd);
  auto* show_cmd = registry_cmd->add_subcommand("show", "Emit one group as algebra JSON + pi1");
  std::string show_group;
  std::vector<int> show_params;
  show_cmd->add_option("group", show_group, "Registry name, e.g. so")->required();
  show_cmd->add_option("params", show_params, "Integer parameters for the registry name");
  add_format(show_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Numeric projective-representation checks");
  verify_cmd->require_subcommand(1);
  auto* weyl_cmd = verify_cmd->add_subcommand("weyl", "Clock/shift commutator phases");
  int weyl_dim = 2;
  weyl_cmd->add_option("--dim", weyl_dim, "Hilbert space dimension")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  add_format(weyl_cmd);
  auto* su2so3_cmd = verify_cmd->add_subcommand("su2so3", "The 2:1 covering SU(2) -> SO(3)");
  long su2so3_samples = 1000;
  unsigned long su2so3_seed = 0;
  su2so3_cmd->add_option("--samples", su2so3_samples, "Random pairs/triples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  su2so3_cmd->add_option("--seed", su2so3_seed, "RNG seed")->capture_default_str();
  add_format(su2so3_cmd);
  auto* rays_cmd = verify_cmd->add_subcommand("rays", "Ray/density-matrix correspondence");
  int rays_dim = 4;
  long rays_samples = 200;
  unsigned long rays_seed = 0;
  rays_cmd->add_option("--dim", rays_dim, "Hilbert space dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rays_cmd->add_option("--samples", rays_samples, "Random states per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rays_cmd->add_option("--seed", rays_seed, "RNG seed")->capture_default_str();
  add_format(rays_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (*validate_cmd) return cmd_validate(validate_file, format, in, out);
    if (*h2_cmd) return cmd_h2(h2_group, h2_params, h2_file, format, in, out);
    if (*extend_cmd) {
      return cmd_extend(extend_algebra, extend_cocycle, extend_all, format, in, out, err);
    }
    if (*gstar_cmd) return cmd_gstar(gstar_group, gstar_dim, in, out);
    if (*classify_cmd) {
      return cmd_classify(classify_group, classify_params, classify_file, classify_pi1,
                          classify_sc, format, in, out);
    }
    if (*list_cmd) return cmd_registry_list(format, out);
    if (*show_cmd) return cmd_registry_show(show_group, show_params, format, out);
    if (*weyl_cmd) return cmd_verify(verify::weyl_report(weyl_dim), format, out);
    if (*su2so3_cmd) return cmd_verify(verify::su2so3_report(su2so3_samples, su2so3_seed), format, out);
    if (*rays_cmd) return cmd_verify(verify::rays_report(rays_dim, rays_samples, rays_seed), format, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CocycleViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotACocycle& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotScalar& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotSU2& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const LiftFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace liesym::cli
