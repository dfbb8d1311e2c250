#include "liesym/cochains.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

void check_n(int n) {
  if (n <= 0) throw BadDimension("cochain dimension must be positive, got " + std::to_string(n));
}

void check_range(int n, int i) {
  if (i < 0 || i >= n) {
    throw DimensionMismatch("index " + std::to_string(i) + " out of range for dim " +
                            std::to_string(n));
  }
}

}  // namespace

Eigen::Index pair_count(int n) {
  return static_cast<Eigen::Index>(n) * (n - 1) / 2;
}

Eigen::Index triple_count(int n) {
  return static_cast<Eigen::Index>(n) * (n - 1) * (n - 2) / 6;
}

Eigen::Index pair_index(int n, int i, int j) {
  check_range(n, i);
  check_range(n, j);
  if (i >= j) throw BadParams("pair_index requires i < j");
  return static_cast<Eigen::Index>(i) * n - static_cast<Eigen::Index>(i) * (i + 1) / 2 +
         (j - i - 1);
}

std::pair<int, int> pair_unindex(int n, Eigen::Index idx) {
  if (idx < 0 || idx >= pair_count(n)) throw BadParams("pair index out of range");
  for (int i = 0;; ++i) {
    const Eigen::Index row = n - 1 - i;
    if (idx < row) return {i, i + 1 + static_cast<int>(idx)};
    idx -= row;
  }
}

Eigen::Index triple_index(int n, int i, int j, int k) {
  check_range(n, i);
  check_range(n, j);
  check_range(n, k);
  if (i >= j || j >= k) throw BadParams("triple_index requires i < j < k");
  return triple_count(n) - triple_count(n - i) + pair_index(n - i - 1, j - i - 1, k - i - 1);
}

std::array<int, 3> triple_unindex(int n, Eigen::Index idx) {
  if (idx < 0 || idx >= triple_count(n)) throw BadParams("triple index out of range");
  for (int i = 0;; ++i) {
    const Eigen::Index block = pair_count(n - i - 1);
    if (idx < block) {
      const auto [j, k] = pair_unindex(n - i - 1, idx);
      return {i, j + i + 1, k + i + 1};
    }
    idx -= block;
  }
}

Rational OneCochain::operator()(const RVector& x) const {
  if (x.size() != lambda.size()) {
    throw DimensionMismatch("OneCochain applied to vector of length " + std::to_string(x.size()));
  }
  Rational acc = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) != 0 && x(i) != 0) acc += lambda(i) * x(i);
  }
  return acc;
}

TwoCochain::TwoCochain(int n) : n_(n), coords_(RVector::Zero(pair_count((check_n(n), n)))) {}

TwoCochain::TwoCochain(int n, RVector coords) : n_(n), coords_(std::move(coords)) {
  check_n(n);
  if (coords_.size() != pair_count(n)) {
    throw DimensionMismatch("TwoCochain: expected " + std::to_string(pair_count(n)) +
                            " coordinates, got " + std::to_string(coords_.size()));
  }
}

Rational TwoCochain::operator()(int i, int j) const {
  check_range(n_, i);
  check_range(n_, j);
  if (i == j) return 0;
  if (i < j) return coords_(pair_index(n_, i, j));
  return -coords_(pair_index(n_, j, i));
}

void TwoCochain::set(int i, int j, const Rational& value) {
  check_range(n_, i);
  check_range(n_, j);
  if (i == j) throw BadParams("TwoCochain::set requires i != j");
  if (i < j) {
    coords_(pair_index(n_, i, j)) = value;
  } else {
    coords_(pair_index(n_, j, i)) = -value;
  }
}

Rational TwoCochain::eval(const RVector& x, const RVector& y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw DimensionMismatch("TwoCochain::eval: vector length mismatch");
  }
  Rational acc = 0;
  Eigen::Index idx = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++idx) {
      if (coords_(idx) == 0) continue;
      const Rational m = x(i) * y(j) - x(j) * y(i);
      if (m != 0) acc += coords_(idx) * m;
    }
  }
  return acc;
}

bool TwoCochain::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& v) { return v == 0; });
}

ThreeCochain::ThreeCochain(int n) : n_(n), coords_(RVector::Zero(triple_count((check_n(n), n)))) {}

ThreeCochain::ThreeCochain(int n, RVector coords) : n_(n), coords_(std::move(coords)) {
  check_n(n);
  if (coords_.size() != triple_count(n)) {
    throw DimensionMismatch("ThreeCochain: expected " + std::to_string(triple_count(n)) +
                            " coordinates, got " + std::to_string(coords_.size()));
  }
}

Rational ThreeCochain::operator()(int i, int j, int k) const {
  check_range(n_, i);
  check_range(n_, j);
  check_range(n_, k);
  if (i == j || j == k || i == k) return 0;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  const Rational v = coords_(triple_index(n_, i, j, k));
  return sign > 0 ? v : -v;
}

void ThreeCochain::set(int i, int j, int k, const Rational& value) {
  check_range(n_, i);
  check_range(n_, j);
  check_range(n_, k);
  if (i == j || j == k || i == k) throw BadParams("ThreeCochain::set requires distinct indices");
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  coords_(triple_index(n_, i, j, k)) = sign > 0 ? value : Rational(-value);
}

bool ThreeCochain::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace liesym
