#include "liesym/lie_algebra.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       BracketMap brackets)
    : name_(std::move(name)), basis_names_(std::move(basis_names)), c_(std::move(brackets)) {
  const int n = dim();
  if (n == 0) throw BadDimension("LieAlgebra: empty basis");
  for (auto it = c_.begin(); it != c_.end();) {
    const auto [i, j] = it->first;
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw BadParams("LieAlgebra: bracket index (" + std::to_string(i) + "," +
                      std::to_string(j) + ") out of range for dim " + std::to_string(n));
    }
    if (i >= j) {
      throw BadParams("LieAlgebra: brackets must be stored with i < j, got (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (it->second.size() != n) {
      throw DimensionMismatch("LieAlgebra: coefficient vector for (" + std::to_string(i) + "," +
                              std::to_string(j) + ") has length " +
                              std::to_string(it->second.size()));
    }
    const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                  [](const Rational& v) { return v == 0; });
    it = zero ? c_.erase(it) : std::next(it);
  }
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim()) {
    throw DimensionMismatch("basis index " + std::to_string(i) + " out of range for dim " +
                            std::to_string(dim()));
  }
}

Rational LieAlgebra::structure_constant(int k, int i, int j) const {
  check_index(k);
  check_index(i);
  check_index(j);
  if (i == j) return 0;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = c_.find({i, j});
  if (it == c_.end()) return 0;
  return flip ? -it->second(k) : it->second(k);
}

RVector LieAlgebra::bracket_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return RVector::Zero(dim());
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = c_.find({i, j});
  if (it == c_.end()) return RVector::Zero(dim());
  return flip ? RVector(-it->second) : it->second;
}

RVector LieAlgebra::bracket(const RVector& x, const RVector& y) const {
  const int n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("bracket: vectors of length " + std::to_string(x.size()) + ", " +
                            std::to_string(y.size()) + " on algebra of dim " + std::to_string(n));
  }
  RVector out = RVector::Zero(n);
  for (const auto& [ij, v] : c_) {
    const auto [i, j] = ij;
    const Rational coeff = x(i) * y(j) - x(j) * y(i);
    if (coeff == 0) continue;
    for (int k = 0; k < n; ++k) {
      if (v(k) != 0) out(k) += coeff * v(k);
    }
  }
  return out;
}

RMatrix LieAlgebra::ad(int i) const {
  check_index(i);
  const int n = dim();
  RMatrix m = RMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = bracket_basis(i, j);
  return m;
}

JacobiReport jacobi_check(const LieAlgebra& L) {
  const int n = L.dim();
  JacobiReport report;
  for (int i = 0; i < n; ++i) {
    RVector ei = RVector::Zero(n);
    ei(i) = 1;
    for (int j = i + 1; j < n; ++j) {
      RVector ej = RVector::Zero(n);
      ej(j) = 1;
      const RVector cij = L.bracket_basis(i, j);
      for (int k = j + 1; k < n; ++k) {
        RVector ek = RVector::Zero(n);
        ek(k) = 1;
        RVector residual = L.bracket(cij, ek);
        residual += L.bracket(L.bracket_basis(j, k), ei);
        residual += L.bracket(L.bracket_basis(k, i), ej);
        if (std::any_of(residual.begin(), residual.end(),
                        [](const Rational& v) { return v != 0; })) {
          report.violations.push_back({i, j, k, std::move(residual)});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

ValidatedAlgebra ValidatedAlgebra::validate(LieAlgebra raw) {
  const JacobiReport report = jacobi_check(raw);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw BadParams("Jacobi identity fails for \"" + raw.name() + "\" at triple (" +
                    std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) +
                    "); " + std::to_string(report.violations.size()) + " violation(s) total");
  }
  return ValidatedAlgebra(std::move(raw));
}

RMatrix killing_form(const ValidatedAlgebra& L) {
  const int n = L->dim();
  std::vector<RMatrix> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(L->ad(i));
  RMatrix k = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational tr = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) tr += ads[i](a, b) * ads[j](b, a);
        }
      }
      k(i, j) = tr;
      k(j, i) = tr;
    }
  }
  return k;
}

bool is_semisimple(const ValidatedAlgebra& L) {
  return bareiss_rank(killing_form(L)) == L->dim();
}

std::vector<RVector> center(const ValidatedAlgebra& L) {
  const int n = L->dim();
  // Row block j holds the coordinates of [e_i, e_j] as i varies: z is central
  // iff this stacked matrix annihilates z.
  RMatrix stacked = RMatrix::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const RVector v = L->bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        if (v(k) != 0) stacked(static_cast<Eigen::Index>(j) * n + k, i) = v(k);
      }
    }
  }
  const RMatrix ker = nullspace(stacked);
  std::vector<RVector> basis;
  basis.reserve(static_cast<std::size_t>(ker.cols()));
  for (Eigen::Index c = 0; c < ker.cols(); ++c) basis.push_back(ker.col(c));
  return basis;
}

std::vector<RVector> derived_subalgebra(const ValidatedAlgebra& L) {
  const int n = L->dim();
  const auto& brackets = L->brackets();
  RMatrix rows = RMatrix::Zero(static_cast<Eigen::Index>(brackets.size()), n);
  Eigen::Index r = 0;
  for (const auto& [ij, v] : brackets) rows.row(r++) = v.transpose();
  const Rref reduced = rref(rows);
  std::vector<RVector> basis;
  basis.reserve(reduced.pivot_cols.size());
  for (Eigen::Index i = 0; i < reduced.rank(); ++i) basis.push_back(reduced.mat.row(i));
  return basis;
}

ValidatedAlgebra transform_basis(const ValidatedAlgebra& L, const RMatrix& S) {
  const int n = L->dim();
  if (S.rows() != n || S.cols() != n) {
    throw DimensionMismatch("transform_basis: matrix is " + std::to_string(S.rows()) + "x" +
                            std::to_string(S.cols()) + " for algebra of dim " + std::to_string(n));
  }
  const RMatrix s_inv = inverse(S);
  LieAlgebra::BracketMap brackets;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const RVector v = L->bracket(S.col(a), S.col(b));
      RVector w = RVector::Zero(n);
      bool nonzero = false;
      for (int m = 0; m < n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k) {
          if (s_inv(m, k) != 0 && v(k) != 0) acc += s_inv(m, k) * v(k);
        }
        w(m) = acc;
        nonzero = nonzero || acc != 0;
      }
      if (nonzero) brackets.emplace(std::make_pair(a, b), std::move(w));
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("f" + std::to_string(i + 1));
  return ValidatedAlgebra::validate(LieAlgebra(L->name(), std::move(names), std::move(brackets)));
}

}  // namespace liesym
