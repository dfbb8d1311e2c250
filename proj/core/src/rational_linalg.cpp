#include "liesym/rational_linalg.hpp"

#include <utility>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

bool is_unit(const Rational& v) { return v == 1 || v == -1; }

}  // namespace

Eigen::Index bareiss_rank(const RMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Fraction-free elimination needs integer entries: scale each row by the
  // lcm of its denominators (row scaling does not change the rank).
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (Eigen::Index i = 0; i < rows; ++i) {
    BigInt scale = 1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      scale = lcm(scale, BigInt(denominator(m(i, j))));
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      a[i][j] = BigInt(numerator(m(i, j))) * (scale / BigInt(denominator(m(i, j))));
    }
  }

  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    // Bareiss update: entries stay minors of the original matrix, so the
    // division by the previous pivot is exact.
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rref rref(const RMatrix& m) {
  RMatrix a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Prefer a +-1 pivot to keep intermediate entries small.
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (p < 0) p = i;
      if (is_unit(a(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) a.row(r).swap(a.row(p));
    if (a(r, c) != 1) {
      const Rational inv = Rational(1) / a(r, c);
      a(r, c) = 1;
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (a(r, j) != 0) a(r, j) *= inv;
      }
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a(i, c) = 0;
      // Row r is zero left of column c, so only the tail is touched.
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), std::move(pivots)};
}

RMatrix nullspace(const RMatrix& m) {
  return nullspace(rref(m), m.cols());
}

RMatrix nullspace(const Rref& r, Eigen::Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }

  RMatrix basis = RMatrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      basis(r.pivot_cols[i], static_cast<Eigen::Index>(k)) =
          -r.mat(static_cast<Eigen::Index>(i), fc);
    }
  }
  return basis;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("solve: matrix has " + std::to_string(a.rows()) +
                            " rows but right-hand side has " + std::to_string(b.rows()));
  }
  RMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Rref r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) {
    return std::nullopt;  // pivot in the augmented column: inconsistent
  }
  RVector x = RVector::Zero(a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    x(r.pivot_cols[i]) = r.mat(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

RMatrix inverse(const RMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) {
    throw DimensionMismatch("inverse: matrix is " + std::to_string(n) + "x" +
                            std::to_string(m.cols()));
  }
  RMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RMatrix::Identity(n, n);
  const Rref r = rref(aug);
  if (r.rank() < n || (n > 0 && r.pivot_cols[static_cast<std::size_t>(n) - 1] >= n)) {
    throw SingularMatrix("inverse: matrix is singular");
  }
  return r.mat.rightCols(n);
}

Inertia symmetric_inertia(RMatrix m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) {
    throw DimensionMismatch("symmetric_inertia: matrix is " + std::to_string(n) + "x" +
                            std::to_string(m.cols()));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw BadParams("symmetric_inertia: matrix is not symmetric");
    }
  }

  Inertia sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Bring a nonzero diagonal entry to position k, if one exists.
      Eigen::Index d = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (m(i, i) != 0) {
          d = i;
          break;
        }
      }
      if (d < 0) {
        // Diagonal of the trailing block is zero. If some off-diagonal entry
        // m(i,j) is nonzero, the congruence row_i += row_j / col_i += col_j
        // produces the diagonal entry 2*m(i,j).
        Eigen::Index oi = -1, oj = -1;
        for (Eigen::Index i = k; i < n && oi < 0; ++i) {
          for (Eigen::Index j = i + 1; j < n; ++j) {
            if (m(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
          }
        }
        if (oi < 0) {
          sig.zero += n - k;  // trailing block is identically zero
          break;
        }
        m.row(oi) += m.row(oj);
        m.col(oi) += m.col(oj);
        d = oi;
      }
      if (d != k) {
        m.row(k).swap(m.row(d));
        m.col(k).swap(m.col(d));
      }
    }
    if (m(k, k) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      for (Eigen::Index j = k; j < n; ++j) m(j, i) -= f * m(j, k);
    }
  }
  return sig;
}

}  // namespace liesym
