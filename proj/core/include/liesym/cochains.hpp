#pragma once

#include <array>
#include <utility>

#include "liesym/rational_linalg.hpp"

namespace liesym {

// Lexicographic indexing of increasing pairs/triples in {0..n-1}: the
// coordinate layouts of ∧² and ∧³.
Eigen::Index pair_count(int n);
Eigen::Index triple_count(int n);
Eigen::Index pair_index(int n, int i, int j);
std::pair<int, int> pair_unindex(int n, Eigen::Index idx);
Eigen::Index triple_index(int n, int i, int j, int k);
std::array<int, 3> triple_unindex(int n, Eigen::Index idx);

// Linear form on the algebra: Λ(e_i) = lambda(i).
struct OneCochain {
  RVector lambda;

  explicit OneCochain(int n) : lambda(RVector::Zero(n)) {}
  explicit OneCochain(RVector v) : lambda(std::move(v)) {}

  int dim() const { return static_cast<int>(lambda.size()); }
  Rational operator()(const RVector& x) const;
};

// Antisymmetric bilinear form, stored as the values on i < j pairs in
// lexicographic order.
class TwoCochain {
 public:
  explicit TwoCochain(int n);
  TwoCochain(int n, RVector coords);

  int n() const { return n_; }
  const RVector& coords() const { return coords_; }

  Rational operator()(int i, int j) const;
  void set(int i, int j, const Rational& value);  // i != j; antisymmetry applied

  // ω(x, y) for arbitrary coordinate vectors.
  Rational eval(const RVector& x, const RVector& y) const;

  bool is_zero() const;

 private:
  int n_;
  RVector coords_;
};

// Alternating trilinear form, stored on i < j < k triples.
class ThreeCochain {
 public:
  explicit ThreeCochain(int n);
  ThreeCochain(int n, RVector coords);

  int n() const { return n_; }
  const RVector& coords() const { return coords_; }

  Rational operator()(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& value);

  bool is_zero() const;

 private:
  int n_;
  RVector coords_;
};

}  // namespace liesym
