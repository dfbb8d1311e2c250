#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "liesym/errors.hpp"
#include "liesym/rational.hpp"

namespace liesym {

// A concrete group with a central 2-cocycle ξ : G × G → ℝᵐ. Elements are flat
// coordinate tuples; the scalar is Rational where the cocycle is polynomial
// with rational coefficients and double otherwise.
template <typename Scalar>
struct GroupLaw {
  using Element = std::vector<Scalar>;

  std::string name;
  int element_size = 0;
  int central_dim = 0;
  std::function<Element()> identity;
  std::function<Element(const Element&, const Element&)> multiply;
  std::function<std::vector<Scalar>(const Element&, const Element&)> cocycle;
  std::function<Element(std::mt19937_64&)> sample;
};

using ExactGroupLaw = GroupLaw<Rational>;
using NumericGroupLaw = GroupLaw<double>;

// ξ(e,e) is subtracted from the cocycle so that ξ(e,·) = ξ(·,e) = 0 (the
// cocycle identity forces both to equal ξ(e,e)).
template <typename Scalar>
void normalize_cocycle(GroupLaw<Scalar>& law) {
  const auto e = law.identity();
  const auto c0 = law.cocycle(e, e);
  if (std::all_of(c0.begin(), c0.end(), [](const Scalar& v) { return v == Scalar(0); })) return;
  law.cocycle = [raw = law.cocycle, c0](const typename GroupLaw<Scalar>::Element& a,
                                        const typename GroupLaw<Scalar>::Element& b) {
    auto v = raw(a, b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c0[i];
    return v;
  };
}

struct CocycleCheckReport {
  long samples = 0;
  double max_residual = 0.0;  // 0 for exact scalars
};

namespace detail {

template <typename Scalar>
std::string format_element(const std::vector<Scalar>& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    if constexpr (std::is_same_v<Scalar, Rational>) {
      os << format_rational(e[i]);
    } else {
      os << e[i];
    }
  }
  os << ")";
  return os.str();
}

}  // namespace detail

// Verifies ξ(g1,g2) + ξ(g1∘g2,g3) = ξ(g2,g3) + ξ(g1,g2∘g3) on pseudorandom
// triples: exactly for Rational scalars, within 1e-12 for double. Throws
// CocycleViolation carrying the witness triple on the first failure.
template <typename Scalar>
CocycleCheckReport group_cocycle_check(const GroupLaw<Scalar>& law, long samples,
                                       unsigned long seed) {
  std::mt19937_64 rng(seed);
  CocycleCheckReport report;
  report.samples = samples;
  for (long s = 0; s < samples; ++s) {
    const auto g1 = law.sample(rng);
    const auto g2 = law.sample(rng);
    const auto g3 = law.sample(rng);
    const auto lhs1 = law.cocycle(g1, g2);
    const auto lhs2 = law.cocycle(law.multiply(g1, g2), g3);
    const auto rhs1 = law.cocycle(g2, g3);
    const auto rhs2 = law.cocycle(g1, law.multiply(g2, g3));
    for (int c = 0; c < law.central_dim; ++c) {
      const Scalar lhs = lhs1[static_cast<std::size_t>(c)] + lhs2[static_cast<std::size_t>(c)];
      const Scalar rhs = rhs1[static_cast<std::size_t>(c)] + rhs2[static_cast<std::size_t>(c)];
      bool ok;
      if constexpr (std::is_same_v<Scalar, Rational>) {
        ok = lhs == rhs;
      } else {
        const double r = std::abs(lhs - rhs);
        report.max_residual = std::max(report.max_residual, r);
        ok = r <= 1e-12;
      }
      if (!ok) {
        throw CocycleViolation("group cocycle identity fails for " + law.name + " on sample " +
                               std::to_string(s) + ": g1=" + detail::format_element(g1) +
                               " g2=" + detail::format_element(g2) +
                               " g3=" + detail::format_element(g3) + " (central component " +
                               std::to_string(c) + ")");
      }
    }
  }
  return report;
}

template <typename Scalar>
struct GStarElement {
  std::vector<Scalar> central;
  std::vector<Scalar> group;
};

// The G⋆ law: (x,g1)·(y,g2) = (x + y + ξ(g1,g2), g1∘g2).
template <typename Scalar>
GStarElement<Scalar> gstar_multiply(const GStarElement<Scalar>& a, const GStarElement<Scalar>& b,
                                    const GroupLaw<Scalar>& law) {
  const auto sz = static_cast<std::size_t>(law.element_size);
  const auto cz = static_cast<std::size_t>(law.central_dim);
  if (a.group.size() != sz || b.group.size() != sz || a.central.size() != cz ||
      b.central.size() != cz) {
    throw DimensionMismatch("gstar_multiply: element shape does not match law \"" + law.name +
                            "\"");
  }
  GStarElement<Scalar> out;
  out.central = law.cocycle(a.group, b.group);
  for (std::size_t i = 0; i < cz; ++i) out.central[i] += a.central[i] + b.central[i];
  out.group = law.multiply(a.group, b.group);
  return out;
}

// Heisenberg group ℝ²ⁿ with ξ((x,y),(x',y')) = (x·y' − y·x')/2, exact.
ExactGroupLaw make_heisenberg_law(int n);

// Galilei group elements (R, v, a, t) — R a row-major 3×3 rotation — with the
// Bargmann cocycle ξ(g1,g2) = ½|v₁|² t₂ + v₁·(R₁ a₂).
NumericGroupLaw make_bargmann_law();

}  // namespace liesym
