#include "liesym/extensions.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

#include "liesym/errors.hpp"

namespace liesym {

ExtendedAlgebra central_extend(const ValidatedAlgebra& L,
                               const std::vector<TwoCochain>& cocycles) {
  const int n = L->dim();
  const int m = static_cast<int>(cocycles.size());
  for (const auto& om : cocycles) {
    if (om.n() != n) {
      throw DimensionMismatch("central_extend: cochain on dim " + std::to_string(om.n()) +
                              " for algebra of dim " + std::to_string(n));
    }
  }

  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RVector v = RVector::Zero(n + m);
      v.head(n) = L->bracket_basis(i, j);
      for (int t = 0; t < m; ++t) v(n + t) = cocycles[static_cast<std::size_t>(t)](i, j);
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) {
        brackets.emplace(std::make_pair(i, j), std::move(v));
      }
    }
  }

  std::vector<std::string> names = L->basis_names();
  for (int t = 1; t <= m; ++t) names.push_back("Z" + std::to_string(t));

  ExtendedAlgebra out{
      LieAlgebra(m == 0 ? L->name() : L->name() + "_ext", std::move(names), std::move(brackets)),
      n,
      {}};
  for (int t = 0; t < m; ++t) out.central_indices.push_back(n + t);
  return out;
}

LieAlgebra quotient_by_center_slice(const ExtendedAlgebra& E) {
  const int n = E.base_dim;
  LieAlgebra::BracketMap brackets;
  for (const auto& [ij, v] : E.algebra.brackets()) {
    if (ij.first >= n || ij.second >= n) continue;
    RVector head = v.head(n);
    if (std::any_of(head.begin(), head.end(), [](const Rational& x) { return x != 0; })) {
      brackets.emplace(ij, std::move(head));
    }
  }
  std::vector<std::string> names(E.algebra.basis_names().begin(),
                                 E.algebra.basis_names().begin() + n);
  std::string name = E.algebra.name();
  if (constexpr std::string_view suffix = "_ext"; name.ends_with(suffix)) {
    name.resize(name.size() - suffix.size());
  }
  return LieAlgebra(std::move(name), std::move(names), std::move(brackets));
}

Fingerprint fingerprint(const ValidatedAlgebra& L) {
  Fingerprint f;
  f.dim = L->dim();
  f.dim_center = static_cast<int>(center(L).size());
  f.dim_derived = static_cast<int>(derived_subalgebra(L).size());
  f.killing_signature = symmetric_inertia(killing_form(L));
  f.dim_H2 = h2(L).dim_H2;
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "(dim=" << f.dim << ", center=" << f.dim_center << ", derived=" << f.dim_derived
     << ", killing=(" << f.killing_signature.positive << "," << f.killing_signature.negative << ","
     << f.killing_signature.zero << "), H2=" << f.dim_H2 << ")";
  return os.str();
}

}  // namespace liesym
