#include <doctest.h>

#include <string>

#include <liesym/classifier.hpp>
#include <liesym/cohomology.hpp>
#include <liesym/errors.hpp>
#include <liesym/json_io.hpp>
#include <liesym/registry.hpp>

using namespace liesym;

namespace {

std::string path_of(const ParseError& e) { return e.what(); }

bool mentions(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("algebra JSON round-trips every registry algebra") {
  for (const auto& entry : registry::list()) {
    CAPTURE(entry.name);
    // list() rows carry name templates like "so(n)"; build concrete members.
    const std::string invocation = [&]() -> std::string {
      if (entry.name == "so") return "so(4)";
      if (entry.name == "lorentz") return "lorentz(1,3)";
      if (entry.name == "poincare") return "poincare(1,3)";
      if (entry.name == "galilei") return "galilei(3)";
      if (entry.name == "euclidean") return "euclidean(2)";
      if (entry.name == "heisenberg") return "heisenberg(2)";
      if (entry.name == "abelian") return "abelian(3)";
      if (entry.name == "torus") return "torus(2)";
      return entry.name;  // su2 takes no parameters
    }();
    const GroupDescriptor G = registry::build(invocation);
    const LieAlgebra& L = G.algebra.algebra();
    const Json j = algebra_to_json(L);
    const AlgebraEnvelope env = algebra_from_json(j);
    CHECK(env.algebra.name() == L.name());
    CHECK(env.algebra.dim() == L.dim());
    CHECK(env.algebra.basis_names() == L.basis_names());
    CHECK(env.algebra.brackets() == L.brackets());
    CHECK(!env.pi1.has_value());
    CHECK(!env.simply_connected.has_value());
  }
}

TEST_CASE("descriptor JSON carries the envelope keys") {
  const GroupDescriptor G = registry::build("so", {3});
  const Json j = descriptor_to_json(G);
  CHECK(j["pi1"]["free_rank"] == 0);
  CHECK(j["pi1"]["torsion"] == Json::array({2}));
  CHECK(j["simply_connected"] == false);
  CHECK(j["universal_cover"] == "SU(2)");

  const AlgebraEnvelope env = algebra_from_json(j);
  REQUIRE(env.pi1.has_value());
  CHECK(env.pi1->free_rank == 0);
  CHECK(env.pi1->torsion == std::vector<int>{2});
  REQUIRE(env.simply_connected.has_value());
  CHECK(*env.simply_connected == false);
  REQUIRE(env.universal_cover.has_value());
  CHECK(*env.universal_cover == "SU(2)");
}

TEST_CASE("descriptor JSON writes null for a missing cover and reads it back") {
  const Json j = descriptor_to_json(registry::build("su2"));
  CHECK(j["universal_cover"].is_null());
  const AlgebraEnvelope env = algebra_from_json(j);
  CHECK(!env.universal_cover.has_value());
  REQUIRE(env.simply_connected.has_value());
  CHECK(*env.simply_connected);
}

TEST_CASE("algebra_from_json accepts either bracket orientation") {
  const Json lower = parse_json_text(R"({
    "name": "h", "dim": 3, "basis": ["p", "q", "z"],
    "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]
  })", "test");
  const Json upper = parse_json_text(R"({
    "name": "h", "dim": 3, "basis": ["p", "q", "z"],
    "brackets": [{"i": 1, "j": 0, "coeffs": {"2": "-1"}}]
  })", "test");
  const LieAlgebra a = algebra_from_json(lower).algebra;
  const LieAlgebra b = algebra_from_json(upper).algebra;
  CHECK(a.brackets() == b.brackets());
  CHECK(a.bracket_basis(0, 1)(2) == Rational(1));
}

TEST_CASE("algebra_from_json accepts consistent redundant halves") {
  const Json both = parse_json_text(R"({
    "name": "h", "dim": 3, "basis": ["p", "q", "z"],
    "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1/2"}},
      {"i": 1, "j": 0, "coeffs": {"2": "-1/2"}}
    ]
  })", "test");
  CHECK(algebra_from_json(both).algebra.bracket_basis(0, 1)(2) == Rational(1, 2));
}

TEST_CASE("algebra_from_json rejects inconsistent halves with a named pair") {
  const Json bad = parse_json_text(R"({
    "name": "h", "dim": 3, "basis": ["p", "q", "z"],
    "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1"}},
      {"i": 1, "j": 0, "coeffs": {"2": "1"}}
    ]
  })", "test");
  CHECK_THROWS_WITH_AS(algebra_from_json(bad),
                       doctest::Contains("antisymmetry"), ParseError);
}

TEST_CASE("algebra_from_json error paths point at the offending node") {
  auto expect_path = [](const char* text, const std::string& fragment) {
    const Json j = parse_json_text(text, "test");
    try {
      algebra_from_json(j);
      FAIL_CHECK("expected ParseError for " << text);
    } catch (const ParseError& e) {
      CAPTURE(fragment);
      CHECK(path_of(e).find(fragment) != std::string::npos);
    }
  };
  // unknown top-level key
  expect_path(R"({"name":"x","dim":1,"basis":["e"],"brackets":[],"extra":1})", "$.extra");
  // missing member
  expect_path(R"({"name":"x","dim":1,"basis":["e"]})", "missing key \"brackets\"");
  // dim / basis mismatch
  expect_path(R"({"name":"x","dim":2,"basis":["e"],"brackets":[]})", "$.basis");
  // non-positive dim
  expect_path(R"({"name":"x","dim":0,"basis":[],"brackets":[]})", "$.dim");
  // bracket index out of range
  expect_path(R"({"name":"x","dim":2,"basis":["a","b"],
                  "brackets":[{"i":0,"j":5,"coeffs":{}}]})", "$.brackets[0].j");
  // i == j
  expect_path(R"({"name":"x","dim":2,"basis":["a","b"],
                  "brackets":[{"i":1,"j":1,"coeffs":{}}]})", "$.brackets[0]");
  // coefficient key that is not an index
  expect_path(R"({"name":"x","dim":2,"basis":["a","b"],
                  "brackets":[{"i":0,"j":1,"coeffs":{"q":"1"}}]})", "$.brackets[0].coeffs.q");
  // coefficient value that is not a rational
  expect_path(R"({"name":"x","dim":2,"basis":["a","b"],
                  "brackets":[{"i":0,"j":1,"coeffs":{"0":"1.5"}}]})", "$.brackets[0].coeffs.0");
  // duplicate pair in the same orientation
  expect_path(R"({"name":"x","dim":3,"basis":["a","b","c"],
                  "brackets":[{"i":0,"j":1,"coeffs":{"2":"1"}},
                              {"i":0,"j":1,"coeffs":{"2":"1"}}]})", "duplicate");
  // unknown key inside a bracket entry
  expect_path(R"({"name":"x","dim":2,"basis":["a","b"],
                  "brackets":[{"i":0,"j":1,"coeffs":{},"value":"1"}]})", "$.brackets[0].value");
}

TEST_CASE("pi1 JSON validation") {
  CHECK_THROWS_AS(pi1_from_json(parse_json_text(R"({"free_rank":-1,"torsion":[]})", "t")),
                  ParseError);
  CHECK_THROWS_AS(pi1_from_json(parse_json_text(R"({"free_rank":0,"torsion":[1]})", "t")),
                  ParseError);
  CHECK_THROWS_AS(pi1_from_json(parse_json_text(R"({"free_rank":0})", "t")), ParseError);
  CHECK_THROWS_AS(pi1_from_json(parse_json_text(R"({"free_rank":0,"torsion":[],"x":1})", "t")),
                  ParseError);
  const Pi1Descriptor pi1 = pi1_from_json(parse_json_text(R"({"free_rank":2,"torsion":[2,3]})",
                                                          "t"));
  CHECK(pi1.free_rank == 2);
  CHECK(pi1.torsion == std::vector<int>({2, 3}));
}

TEST_CASE("two-cochain JSON round trip keeps i < j cells") {
  TwoCochain om(4);
  om.set(0, 2, Rational(3, 2));
  om.set(3, 1, Rational(-1));  // stored as (1,3) with flipped sign
  const Json j = two_cochain_to_json(om);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  for (const auto& cell : j) {
    CHECK(cell["i"].get<int>() < cell["j"].get<int>());
  }
  const TwoCochain back = two_cochain_from_json(j, 4);
  CHECK(back.coords() == om.coords());
}

TEST_CASE("two_cochain_from_json rejects malformed cells") {
  CHECK_THROWS_AS(two_cochain_from_json(parse_json_text(R"({"i":0})", "t"), 3), ParseError);
  CHECK_THROWS_AS(two_cochain_from_json(parse_json_text(R"([{"i":0,"j":0,"value":"1"}])", "t"), 3),
                  ParseError);
  CHECK_THROWS_AS(two_cochain_from_json(parse_json_text(R"([{"i":0,"j":7,"value":"1"}])", "t"), 3),
                  ParseError);
  // duplicate cell across orientations
  CHECK_THROWS_AS(
      two_cochain_from_json(
          parse_json_text(R"([{"i":0,"j":1,"value":"1"},{"i":1,"j":0,"value":"-1"}])", "t"), 3),
      ParseError);
  CHECK_THROWS_AS(two_cochain_from_json(
                      parse_json_text(R"([{"i":0,"j":1,"value":"1","w":2}])", "t"), 3),
                  ParseError);
}

TEST_CASE("cocycles_from_json: bare array vs h2 report object") {
  const Json bare = parse_json_text(R"([{"i":0,"j":1,"value":"1"}])", "t");
  const auto single = cocycles_from_json(bare, 3, false);
  REQUIRE(single.size() == 1);
  CHECK(single[0](0, 1) == Rational(1));

  const Json report = h2_to_json(h2(registry::build("heisenberg", {1}).algebra));
  const auto all = cocycles_from_json(report, 3, true);
  CHECK(all.size() == 2);
  // two representatives but --all-h2 not requested
  try {
    cocycles_from_json(report, 3, false);
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(mentions(e, "--all-h2"));
  }
  CHECK_THROWS_AS(cocycles_from_json(parse_json_text("3", "t"), 3, false), ParseError);
  CHECK_THROWS_AS(cocycles_from_json(parse_json_text(R"({"dim_H2":1})", "t"), 3, true),
                  ParseError);
}

TEST_CASE("h2 report JSON has the documented shape") {
  const Json j = h2_to_json(h2(registry::build("galilei", {3}).algebra));
  CHECK(j["dim_Z2"] == 10);
  CHECK(j["dim_B2"] == 9);
  CHECK(j["dim_H2"] == 1);
  REQUIRE(j["representatives"].is_array());
  REQUIRE(j["representatives"].size() == 1);
  // the mass cocycle: three synchronized boost/translation cells
  CHECK(j["representatives"][0].size() == 3);
}

TEST_CASE("extended algebra JSON lists the central indices") {
  const GroupDescriptor G = registry::build("abelian", {2});
  const ExtendedAlgebra E = central_extend(G.algebra, h2(G.algebra).representatives);
  const Json j = extended_to_json(E);
  CHECK(j["dim"] == 3);
  CHECK(j["central_indices"] == Json::array({2}));
  // round-trips through the plain algebra reader once the extra key is gone
  Json plain = j;
  plain.erase("central_indices");
  CHECK(algebra_from_json(plain).algebra.dim() == 3);
}

TEST_CASE("jacobi report JSON for a clean and a broken algebra") {
  const Json ok = jacobi_report_to_json(jacobi_check(registry::build("su2").algebra.algebra()));
  CHECK(ok["ok"] == true);
  CHECK(ok["violations"].empty());

  LieAlgebra::BracketMap broken;
  RVector c = RVector::Zero(3);
  c(2) = 1;
  broken.emplace(std::make_pair(0, 1), c);
  RVector a = RVector::Zero(3);
  a(0) = 1;
  broken.emplace(std::make_pair(0, 2), a);
  RVector b = RVector::Zero(3);
  b(1) = 1;
  broken.emplace(std::make_pair(1, 2), b);
  const Json bad =
      jacobi_report_to_json(jacobi_check(LieAlgebra("broken", {"a", "b", "c"}, broken)));
  CHECK(bad["ok"] == false);
  REQUIRE(bad["violations"].size() == 1);
  CHECK(bad["violations"][0]["i"] == 0);
  CHECK(bad["violations"][0]["j"] == 1);
  CHECK(bad["violations"][0]["k"] == 2);
  CHECK(bad["violations"][0]["residual"]["2"] == "-2");
}

TEST_CASE("verdict JSON carries case, pi1, and the enlarged algebra") {
  const Json j = verdict_to_json(classify(registry::build("galilei", {3})));
  CHECK(j["case"] == "CentralExtensionOfCover");
  CHECK(j["dim_H2"] == 1);
  CHECK(j["pi1"]["torsion"] == Json::array({2}));
  CHECK(j["enlarged"]["dim"] == 11);
  CHECK(j["enlarged"]["central_indices"] == Json::array({10}));
  const std::string narrative = j["narrative"].get<std::string>();
  CHECK(narrative.find("Cassinelli") != std::string::npos);
}

TEST_CASE("check report JSON mirrors the checks") {
  verify::CheckReport report;
  report.checks.push_back({"alpha", true, 1e-15});
  report.checks.push_back({"beta", false, 0.25});
  const Json j = check_report_to_json(report);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "alpha");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j["checks"][1]["max_residual"] == doctest::Approx(0.25));
}

TEST_CASE("parse_json_text prefixes the origin on syntax errors") {
  try {
    parse_json_text("{not json", "stdin");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(mentions(e, "stdin"));
  }
}
