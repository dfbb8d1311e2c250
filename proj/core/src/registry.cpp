#include "liesym/registry.hpp"

#include <map>

#include "liesym/errors.hpp"

namespace liesym {

std::string pi1_to_text(const Pi1Descriptor& pi1) {
  if (pi1.trivial()) return "{e}";
  std::string out;
  const auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += " × ";
    out += factor;
  };
  if (pi1.free_rank == 1) append("ℤ");
  if (pi1.free_rank > 1) append("ℤ" + reals_to_power(pi1.free_rank).substr(std::string("ℝ").size()));
  for (int t : pi1.torsion) append("ℤ/" + std::to_string(t));
  return out;
}

std::string reals_to_power(int n) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = "ℝ";
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

namespace registry {

namespace {

std::string superscript(int n) {
  const std::string r = reals_to_power(n);
  return r.substr(std::string("ℝ").size());
}

std::string invocation(const std::string& name, const std::vector<int>& params) {
  if (params.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

void add_term(RVector& v, const std::map<std::pair<int, int>, int>& index, const Rational& coeff,
              int x, int y) {
  if (coeff == 0 || x == y) return;
  if (x < y) {
    v(index.at({x, y})) += coeff;
  } else {
    v(index.at({y, x})) -= coeff;
  }
}

// so(η) on antisymmetric generators M_ab:
// [M_ab, M_cd] = η_bc M_ad − η_ac M_bd − η_bd M_ac + η_ad M_bc  (η diagonal).
// Labels use label_base + index (0-based for spacetime, 1-based for space).
LieAlgebra::BracketMap so_brackets(const std::vector<int>& eta, int dim_total, int offset,
                                   const std::map<std::pair<int, int>, int>& index) {
  LieAlgebra::BracketMap brackets;
  const auto eta_at = [&eta](int a, int b) { return a == b ? eta[static_cast<std::size_t>(a)] : 0; };
  for (auto p1 = index.begin(); p1 != index.end(); ++p1) {
    for (auto p2 = std::next(p1); p2 != index.end(); ++p2) {
      const auto [a, b] = p1->first;
      const auto [c, d] = p2->first;
      RVector v = RVector::Zero(dim_total);
      RVector head = RVector::Zero(dim_total);
      add_term(head, index, eta_at(b, c), a, d);
      add_term(head, index, -eta_at(a, c), b, d);
      add_term(head, index, -eta_at(b, d), a, c);
      add_term(head, index, eta_at(a, d), b, c);
      bool nonzero = false;
      for (const auto& [pair, idx] : index) {
        if (head(idx) != 0) {
          v(offset + idx) = head(idx);
          nonzero = true;
        }
      }
      if (nonzero) brackets.emplace(std::make_pair(offset + p1->second, offset + p2->second), v);
    }
  }
  return brackets;
}

std::map<std::pair<int, int>, int> pair_basis_index(int n) {
  std::map<std::pair<int, int>, int> index;
  int next = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) index[{a, b}] = next++;
  }
  return index;
}

std::vector<std::string> pair_basis_names(int n, int label_base) {
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      names.push_back("M" + std::to_string(a + label_base) + std::to_string(b + label_base));
    }
  }
  return names;
}

LieAlgebra cyclic_so3(const std::string& name) {
  // [J1,J2] = J3, [J2,J3] = J1, [J3,J1] = J2.
  LieAlgebra::BracketMap brackets;
  RVector e1 = RVector::Zero(3), e2 = RVector::Zero(3), e3 = RVector::Zero(3);
  e1(0) = 1;
  e2(1) = 1;
  e3(2) = 1;
  brackets.emplace(std::make_pair(0, 1), e3);
  brackets.emplace(std::make_pair(1, 2), e1);
  brackets.emplace(std::make_pair(0, 2), RVector(-e2));
  return LieAlgebra(name, {"J1", "J2", "J3"}, std::move(brackets));
}

void check_arity(const std::string& name, const std::vector<int>& params, std::size_t arity) {
  if (params.size() != arity) {
    throw BadParams("registry: " + name + " takes " + std::to_string(arity) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
}

GroupDescriptor build_so(const std::vector<int>& params) {
  check_arity("so", params, 1);
  const int n = params[0];
  if (n < 3) throw BadParams("registry: so(n) needs n >= 3, got " + std::to_string(n));
  if (n > 16) throw BadParams("registry: so(n) capped at n = 16");
  const std::string name = invocation("so", params);

  LieAlgebra algebra = [&] {
    if (n == 3) return cyclic_so3(name);
    const auto index = pair_basis_index(n);
    const int dim = static_cast<int>(index.size());
    return LieAlgebra(name, pair_basis_names(n, 1),
                      so_brackets(std::vector<int>(static_cast<std::size_t>(n), 1), dim, 0, index));
  }();

  return GroupDescriptor{
      name,
      "SO(" + std::to_string(n) + ")",
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      Pi1Descriptor{0, {2}},
      n == 3 ? std::string("SU(2)") : "Spin(" + std::to_string(n) + ")",
      "π₁(SO(n)) = ℤ/2 for n ≥ 3; universal cover Spin(n), with Spin(3) ≅ SU(2) "
      "(Hall, Lie Groups, Lie Algebras, and Representations §1.3, §5.7)."};
}

GroupDescriptor build_su2(const std::vector<int>& params) {
  check_arity("su2", params, 0);
  return GroupDescriptor{"su2",
                         "SU(2)",
                         ValidatedAlgebra::validate(cyclic_so3("su2")),
                         true,
                         Pi1Descriptor{},
                         std::nullopt,
                         "SU(2) ≅ S³ is simply connected (Hall §1.3); same structure constants "
                         "as so(3) — only the topology differs."};
}

GroupDescriptor build_lorentz(const std::vector<int>& params) {
  if (params != std::vector<int>{1, 3}) {
    throw BadParams("registry: lorentz supports exactly (1,3)");
  }
  const std::vector<int> eta = {1, -1, -1, -1};
  const auto index = pair_basis_index(4);
  const int dim = static_cast<int>(index.size());
  LieAlgebra algebra("lorentz(1,3)", pair_basis_names(4, 0), so_brackets(eta, dim, 0, index));
  return GroupDescriptor{
      "lorentz(1,3)",
      "SO⁺(1,3)",
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      Pi1Descriptor{0, {2}},
      "SL(2,ℂ)",
      "SO⁺(1,3) deformation-retracts onto SO(3), so π₁ = ℤ/2; universal cover SL(2,ℂ) "
      "(Hall §1.3.4; Wigner 1939)."};
}

GroupDescriptor build_poincare(const std::vector<int>& params) {
  if (params != std::vector<int>{1, 3}) {
    throw BadParams("registry: poincare supports exactly (1,3)");
  }
  const std::vector<int> eta = {1, -1, -1, -1};
  const auto index = pair_basis_index(4);
  const int m_count = static_cast<int>(index.size());
  const int dim = m_count + 4;

  LieAlgebra::BracketMap brackets = so_brackets(eta, dim, 0, index);
  // [M_ab, P_c] = η_bc P_a − η_ac P_b
  for (const auto& [ab, m_idx] : index) {
    const auto [a, b] = ab;
    for (int c = 0; c < 4; ++c) {
      RVector v = RVector::Zero(dim);
      bool nonzero = false;
      if (b == c) {
        v(m_count + a) += eta[static_cast<std::size_t>(b)];
        nonzero = true;
      }
      if (a == c) {
        v(m_count + b) -= eta[static_cast<std::size_t>(a)];
        nonzero = true;
      }
      if (nonzero) brackets.emplace(std::make_pair(m_idx, m_count + c), std::move(v));
    }
  }

  std::vector<std::string> names = pair_basis_names(4, 0);
  for (int c = 0; c < 4; ++c) names.push_back("P" + std::to_string(c));
  LieAlgebra algebra("poincare(1,3)", std::move(names), std::move(brackets));
  return GroupDescriptor{
      "poincare(1,3)",
      "ℝ⁴ ⋊ SO⁺(1,3)",
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      Pi1Descriptor{0, {2}},
      "ℝ⁴ ⋊ SL(2,ℂ)",
      "ℝ⁴ ⋊ SO⁺(1,3) is homotopy-equivalent to its Lorentz factor, so π₁ = ℤ/2; "
      "universal cover ℝ⁴ ⋊ SL(2,ℂ) (Wigner 1939; Weinberg, QFT I §2.7). Not semisimple."};
}

GroupDescriptor build_galilei(const std::vector<int>& params) {
  check_arity("galilei", params, 1);
  const int d = params[0];
  if (d < 2) throw BadParams("registry: galilei(d) needs d >= 2, got " + std::to_string(d));
  if (d > 12) throw BadParams("registry: galilei(d) capped at d = 12");
  const std::string name = invocation("galilei", params);

  const auto index = pair_basis_index(d);
  const int n_rot = static_cast<int>(index.size());
  const int dim = n_rot + 2 * d + 1;
  const int k0 = n_rot;       // boosts K_1..K_d
  const int p0 = n_rot + d;   // translations P_1..P_d
  const int h_idx = dim - 1;  // time translation H

  LieAlgebra::BracketMap brackets =
      so_brackets(std::vector<int>(static_cast<std::size_t>(d), 1), dim, 0, index);
  // [J_ab, V_c] = δ_bc V_a − δ_ac V_b for V ∈ {K, P}
  for (const auto& [ab, j_idx] : index) {
    const auto [a, b] = ab;
    for (const int v0 : {k0, p0}) {
      for (int c = 0; c < d; ++c) {
        RVector v = RVector::Zero(dim);
        bool nonzero = false;
        if (b == c) {
          v(v0 + a) += 1;
          nonzero = true;
        }
        if (a == c) {
          v(v0 + b) -= 1;
          nonzero = true;
        }
        if (nonzero) brackets.emplace(std::make_pair(j_idx, v0 + c), std::move(v));
      }
    }
  }
  // [K_i, H] = P_i
  for (int i = 0; i < d; ++i) {
    RVector v = RVector::Zero(dim);
    v(p0 + i) = 1;
    brackets.emplace(std::make_pair(k0 + i, h_idx), std::move(v));
  }

  std::vector<std::string> names;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      names.push_back("J" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  for (int i = 1; i <= d; ++i) names.push_back("K" + std::to_string(i));
  for (int i = 1; i <= d; ++i) names.push_back("P" + std::to_string(i));
  names.push_back("H");

  LieAlgebra algebra(name, std::move(names), std::move(brackets));

  Pi1Descriptor pi1 = d == 2 ? Pi1Descriptor{1, {}} : Pi1Descriptor{0, {2}};
  std::string cover;
  if (d == 2) {
    cover = "ℝ³ ⋊ (ℝ² ⋊ ℝ)";
  } else if (d == 3) {
    cover = "ℝ⁴ ⋊ (ℝ³ ⋊ SU(2))";
  } else {
    cover = reals_to_power(d + 1) + " ⋊ (" + reals_to_power(d) + " ⋊ Spin(" + std::to_string(d) +
            "))";
  }
  return GroupDescriptor{
      name,
      "Gal(" + std::to_string(d) + ")",
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      std::move(pi1),
      std::move(cover),
      "Gal(d) = " + reals_to_power(d + 1) + " ⋊ (" + reals_to_power(d) +
          " ⋊ SO(" + std::to_string(d) +
          ")) is homotopy-equivalent to its rotation factor: π₁ = ℤ for d = 2 and ℤ/2 for d ≥ 3 "
          "(Lévy-Leblond 1963; Bargmann 1954). The nontrivial H² class carries the mass central "
          "charge (Bargmann): extending makes the boost–translation bracket [K_i,P_j] = δ_ij·M."};
}

GroupDescriptor build_euclidean(const std::vector<int>& params) {
  check_arity("euclidean", params, 1);
  if (params[0] != 2) throw BadParams("registry: euclidean supports exactly euclidean(2)");
  // [J,P1] = P2, [J,P2] = −P1
  LieAlgebra::BracketMap brackets;
  RVector v1 = RVector::Zero(3), v2 = RVector::Zero(3);
  v1(2) = 1;
  brackets.emplace(std::make_pair(0, 1), std::move(v1));
  v2(1) = -1;
  brackets.emplace(std::make_pair(0, 2), std::move(v2));
  LieAlgebra algebra("euclidean(2)", {"J", "P1", "P2"}, std::move(brackets));
  return GroupDescriptor{
      "euclidean(2)",
      "E(2)",
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      Pi1Descriptor{1, {}},
      "ℝ² ⋊ ℝ",
      "E(2) = ℝ² ⋊ SO(2) deformation-retracts onto the circle, so π₁ = ℤ; the universal cover "
      "unwinds the rotation (standard; e.g. Hatcher §1.2)."};
}

GroupDescriptor build_heisenberg(const std::vector<int>& params) {
  check_arity("heisenberg", params, 1);
  const int n = params[0];
  if (n < 1) throw BadParams("registry: heisenberg(n) needs n >= 1, got " + std::to_string(n));
  if (n > 60) throw BadParams("registry: heisenberg(n) capped at n = 60");
  const std::string name = invocation("heisenberg", params);
  const int dim = 2 * n + 1;
  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < n; ++i) {
    RVector v = RVector::Zero(dim);
    v(dim - 1) = 1;
    brackets.emplace(std::make_pair(i, n + i), std::move(v));
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  names.push_back("z");
  LieAlgebra algebra(name, std::move(names), std::move(brackets));
  return GroupDescriptor{name,
                         name,
                         ValidatedAlgebra::validate(std::move(algebra)),
                         true,
                         Pi1Descriptor{},
                         std::nullopt,
                         "The Heisenberg group is diffeomorphic to " + reals_to_power(dim) +
                             ", hence simply connected (Folland, Harmonic Analysis in Phase "
                             "Space §1.1)."};
}

GroupDescriptor build_abelian(const std::vector<int>& params) {
  check_arity("abelian", params, 1);
  const int n = params[0];
  if (n < 1) throw BadParams("registry: abelian(n) needs n >= 1, got " + std::to_string(n));
  if (n > 60) throw BadParams("registry: abelian(n) capped at n = 60");
  const std::string name = invocation("abelian", params);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  LieAlgebra algebra(name, std::move(names), {});
  return GroupDescriptor{name,
                         reals_to_power(n),
                         ValidatedAlgebra::validate(std::move(algebra)),
                         true,
                         Pi1Descriptor{},
                         std::nullopt,
                         reals_to_power(n) + " is contractible, hence simply connected."};
}

GroupDescriptor build_torus(const std::vector<int>& params) {
  check_arity("torus", params, 1);
  const int n = params[0];
  if (n < 1) throw BadParams("registry: torus(n) needs n >= 1, got " + std::to_string(n));
  if (n > 60) throw BadParams("registry: torus(n) capped at n = 60");
  const std::string name = invocation("torus", params);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  LieAlgebra algebra(name, std::move(names), {});
  return GroupDescriptor{
      name,
      "T" + superscript(n),
      ValidatedAlgebra::validate(std::move(algebra)),
      false,
      Pi1Descriptor{n, {}},
      reals_to_power(n),
      "π₁(Tⁿ) = ℤⁿ with universal cover " + reals_to_power(n) +
          " (Hatcher §1.1). H² representatives are algebra-level data only: enumerating "
          "smooth-near-identity group cocycles for a non-simply-connected group is out of scope."};
}

}  // namespace

GroupDescriptor build(const std::string& name, const std::vector<int>& params) {
  if (name == "so") return build_so(params);
  if (name == "su2") return build_su2(params);
  if (name == "lorentz") return build_lorentz(params);
  if (name == "poincare") return build_poincare(params);
  if (name == "galilei") return build_galilei(params);
  if (name == "euclidean") return build_euclidean(params);
  if (name == "heisenberg") return build_heisenberg(params);
  if (name == "abelian") return build_abelian(params);
  if (name == "torus") return build_torus(params);
  throw UnknownGroup("registry: unknown group \"" + name +
                     "\" (known: abelian, euclidean, galilei, heisenberg, lorentz, poincare, so, "
                     "su2, torus)");
}

GroupDescriptor build(const std::string& invocation_text) {
  const auto open = invocation_text.find('(');
  if (open == std::string::npos) return build(invocation_text, {});
  if (invocation_text.back() != ')') {
    throw ParseError("registry: malformed invocation \"" + invocation_text + "\"");
  }
  const std::string name = invocation_text.substr(0, open);
  const std::string inner = invocation_text.substr(open + 1, invocation_text.size() - open - 2);
  std::vector<int> params;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string tok = inner.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("registry: bad parameter \"" + tok + "\" in \"" + invocation_text + "\"");
    }
    pos = comma + 1;
  }
  return build(name, params);
}

std::vector<RegistryEntry> list() {
  return {
      {"abelian", "n", "abelian algebra of ℝⁿ (simply connected)"},
      {"euclidean", "2", "Euclidean group E(2) = ℝ² ⋊ SO(2)"},
      {"galilei", "d", "Galilei group in d ≥ 2 spatial dimensions"},
      {"heisenberg", "n", "Heisenberg algebra: [p_i, q_i] = z"},
      {"lorentz", "1,3", "proper orthochronous Lorentz group SO⁺(1,3)"},
      {"poincare", "1,3", "Poincaré group ℝ⁴ ⋊ SO⁺(1,3)"},
      {"so", "n", "rotation group SO(n), n ≥ 3"},
      {"su2", "", "SU(2), the universal cover of SO(3)"},
      {"torus", "n", "torus Tⁿ = ℝⁿ/ℤⁿ (algebra-level H² only)"},
  };
}

}  // namespace registry

}  // namespace liesym
