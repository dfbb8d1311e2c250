#include "liesym/cohomology.hpp"

#include <cassert>
#include <map>
#include <set>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

// ω([e_a, e_b], e_t) for a stored bracket vector v = [e_a, e_b].
Rational pairing(const RVector& v, int t, const TwoCochain& om) {
  Rational acc = 0;
  for (Eigen::Index m = 0; m < v.size(); ++m) {
    if (v(m) == 0 || m == t) continue;
    acc += v(m) * om(static_cast<int>(m), t);
  }
  return acc;
}

}  // namespace

TwoCochain d1(const ValidatedAlgebra& L, const OneCochain& lam) {
  const int n = L->dim();
  if (lam.dim() != n) {
    throw DimensionMismatch("d1: cochain of dim " + std::to_string(lam.dim()) +
                            " on algebra of dim " + std::to_string(n));
  }
  TwoCochain out(n);
  for (const auto& [ij, v] : L->brackets()) {
    out.set(ij.first, ij.second, -lam(v));
  }
  return out;
}

ThreeCochain d2(const ValidatedAlgebra& L, const TwoCochain& om) {
  const int n = L->dim();
  if (om.n() != n) {
    throw DimensionMismatch("d2: cochain of dim " + std::to_string(om.n()) +
                            " on algebra of dim " + std::to_string(n));
  }
  const auto& brackets = L->brackets();
  ThreeCochain out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Rational value = 0;
        if (auto it = brackets.find({i, j}); it != brackets.end()) {
          value -= pairing(it->second, k, om);
        }
        if (auto it = brackets.find({i, k}); it != brackets.end()) {
          value += pairing(it->second, j, om);
        }
        if (auto it = brackets.find({j, k}); it != brackets.end()) {
          value -= pairing(it->second, i, om);
        }
        if (value != 0) out.set(i, j, k, value);
      }
    }
  }
  return out;
}

RMatrix d1_matrix(const ValidatedAlgebra& L) {
  const int n = L->dim();
  RMatrix m = RMatrix::Zero(pair_count(n), n);
  for (const auto& [ij, v] : L->brackets()) {
    const Eigen::Index row = pair_index(n, ij.first, ij.second);
    for (int k = 0; k < n; ++k) {
      if (v(k) != 0) m(row, k) = -v(k);
    }
  }
  return m;
}

namespace {

// Sparse rows of the d2 matrix, keyed by ∧³ row index; identically-zero rows
// are never materialized. Each stored bracket (a,b) contributes to the triples
// {a, b, t}: the term sign depends on where t sits relative to (a, b), and the
// ∧² column sign on the order of (m, t).
std::map<Eigen::Index, std::map<Eigen::Index, Rational>> d2_sparse_rows(const LieAlgebra& L) {
  const int n = L.dim();
  std::map<Eigen::Index, std::map<Eigen::Index, Rational>> rows;
  for (const auto& [ab, v] : L.brackets()) {
    const auto [a, b] = ab;
    for (int t = 0; t < n; ++t) {
      if (t == a || t == b) continue;
      const int term_sign = (t < a || t > b) ? -1 : 1;
      int i = a, j = b, k = t;
      if (k < i) std::swap(i, k);
      if (k < j) std::swap(j, k);
      const Eigen::Index row = triple_index(n, i, j, k);
      for (int m = 0; m < n; ++m) {
        if (v(m) == 0 || m == t) continue;
        const int col_sign = m < t ? 1 : -1;
        const Eigen::Index col = m < t ? pair_index(n, m, t) : pair_index(n, t, m);
        Rational& cell = rows[row][col];
        cell += Rational(term_sign * col_sign) * v(m);
      }
    }
  }
  return rows;
}

RMatrix dense_from_sparse_rows(
    const std::map<Eigen::Index, std::map<Eigen::Index, Rational>>& rows, Eigen::Index cols) {
  Eigen::Index nonzero_rows = 0;
  for (const auto& [row, cells] : rows) {
    for (const auto& [col, val] : cells) {
      if (val != 0) {
        ++nonzero_rows;
        break;
      }
    }
  }
  RMatrix m = RMatrix::Zero(nonzero_rows, cols);
  Eigen::Index r = 0;
  for (const auto& [row, cells] : rows) {
    bool any = false;
    for (const auto& [col, val] : cells) {
      if (val != 0) {
        m(r, col) = val;
        any = true;
      }
    }
    if (any) ++r;
  }
  return m;
}

}  // namespace

RMatrix d2_matrix(const ValidatedAlgebra& L) {
  const int n = L->dim();
  RMatrix m = RMatrix::Zero(triple_count(n), pair_count(n));
  for (const auto& [row, cells] : d2_sparse_rows(*L)) {
    for (const auto& [col, val] : cells) {
      if (val != 0) m(row, col) = val;
    }
  }
  return m;
}

bool is_cocycle(const ValidatedAlgebra& L, const TwoCochain& om) {
  return d2(L, om).is_zero();
}

std::optional<OneCochain> is_coboundary(const ValidatedAlgebra& L, const TwoCochain& om) {
  if (!is_cocycle(L, om)) {
    throw NotACocycle("is_coboundary: d2 of the given cochain is nonzero");
  }
  const auto lam = solve(d1_matrix(L), om.coords());
  if (!lam) return std::nullopt;
  return OneCochain(*lam);
}

std::optional<OneCochain> are_cohomologous(const ValidatedAlgebra& L, const TwoCochain& om1,
                                           const TwoCochain& om2) {
  if (!is_cocycle(L, om1) || !is_cocycle(L, om2)) {
    throw NotACocycle("are_cohomologous: inputs must both be cocycles");
  }
  const auto lam = solve(d1_matrix(L), RVector(om2.coords() - om1.coords()));
  if (!lam) return std::nullopt;
  return OneCochain(*lam);
}

CohomologyBasis h2(const ValidatedAlgebra& L) {
  const int n = L->dim();
  const Eigen::Index p2 = pair_count(n);

  const RMatrix d2p = dense_from_sparse_rows(d2_sparse_rows(*L), p2);
  const Rref d2r = rref(d2p);
  const RMatrix zbasis = nullspace(d2r, p2);

  // Canonical bases of Z² and of B² = im(d1) in reduced row echelon form.
  // Since B² ⊆ Z², every pivot column of the B² basis is a pivot column of
  // the Z² basis; the rows whose pivots are new complete B² to Z² and are
  // independent modulo coboundaries.
  const Rref zcanon = rref(zbasis.transpose());
  const Rref bcanon = rref(d1_matrix(L).transpose());
  const std::set<Eigen::Index> bpivots(bcanon.pivot_cols.begin(), bcanon.pivot_cols.end());

  CohomologyBasis out;
  out.dim_Z2 = static_cast<int>(p2 - d2r.rank());
  out.dim_B2 = static_cast<int>(bcanon.rank());
  out.dim_H2 = out.dim_Z2 - out.dim_B2;

  for (Eigen::Index r = 0; r < zcanon.rank(); ++r) {
    if (bpivots.contains(zcanon.pivot_cols[static_cast<std::size_t>(r)])) continue;
    out.representatives.emplace_back(n, RVector(zcanon.mat.row(r).transpose()));
  }
  assert(static_cast<int>(out.representatives.size()) == out.dim_H2);
  return out;
}

}  // namespace liesym
