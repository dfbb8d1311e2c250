#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liesym/rational_linalg.hpp"

namespace liesym {

// Finite-dimensional Lie algebra over exact rationals, given by structure
// constants [e_i, e_j] = sum_k c^k_{ij} e_k. Only pairs with i < j are stored;
// accessors synthesize antisymmetry, so it cannot be violated by construction.
class LieAlgebra {
 public:
  using BracketMap = std::map<std::pair<int, int>, RVector>;

  LieAlgebra(std::string name, std::vector<std::string> basis_names, BracketMap brackets);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_names_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  // Stored (i < j) brackets with nonzero coefficient vectors.
  const BracketMap& brackets() const { return c_; }

  // c^k_{ij}, antisymmetric in (i, j).
  Rational structure_constant(int k, int i, int j) const;

  // [e_i, e_j] as a coordinate vector.
  RVector bracket_basis(int i, int j) const;

  // Bilinear extension to arbitrary coordinate vectors.
  RVector bracket(const RVector& x, const RVector& y) const;

  // Matrix of ad(e_i); column j holds [e_i, e_j].
  RMatrix ad(int i) const;

 private:
  void check_index(int i) const;

  std::string name_;
  std::vector<std::string> basis_names_;
  BracketMap c_;
};

struct JacobiViolation {
  int i = 0;
  int j = 0;
  int k = 0;
  RVector residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport jacobi_check(const LieAlgebra& L);

// Wrapper certifying that the Jacobi identity holds. Downstream operations
// take this type, which keeps unvalidated data out of them.
class ValidatedAlgebra {
 public:
  // Throws BadParams (listing the first offending triple) if Jacobi fails.
  static ValidatedAlgebra validate(LieAlgebra raw);

  const LieAlgebra& algebra() const { return algebra_; }
  const LieAlgebra& operator*() const { return algebra_; }
  const LieAlgebra* operator->() const { return &algebra_; }

 private:
  explicit ValidatedAlgebra(LieAlgebra a) : algebra_(std::move(a)) {}
  LieAlgebra algebra_;
};

// K_ij = trace(ad e_i ∘ ad e_j); symmetric.
RMatrix killing_form(const ValidatedAlgebra& L);

// Cartan criterion: det(killing_form) != 0.
bool is_semisimple(const ValidatedAlgebra& L);

// Basis of {z : [z, x] = 0 for all x}, as exact nullspace of the stacked ad map.
std::vector<RVector> center(const ValidatedAlgebra& L);

// Basis of span{[e_i, e_j]}, in reduced row echelon form.
std::vector<RVector> derived_subalgebra(const ValidatedAlgebra& L);

// Rewrites L in the basis f_a = sum_i S(i,a) e_i. Throws SingularMatrix if S
// is not invertible.
ValidatedAlgebra transform_basis(const ValidatedAlgebra& L, const RMatrix& S);

}  // namespace liesym
