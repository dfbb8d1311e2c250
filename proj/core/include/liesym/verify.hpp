#pragma once

#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace liesym::verify {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Rank-one density matrix ψψ†/‖ψ‖²; the ray of ψ determines it and vice versa.
// Throws ZeroVector on the zero state.
CMatrix ray_to_density(const CVector& psi);

// |⟨φ|ψ⟩|²/(‖ψ‖²‖φ‖²), the physically observable transition probability.
double transition_probability(const CVector& psi, const CVector& phi);

// Clock and shift unitaries in dimension d: clock = diag(ζ^j), shift maps
// basis column j to row (j+1) mod d, with ζ = e^{2πi/d}.  Throws BadDimension
// for d < 2.
std::pair<CMatrix, CMatrix> weyl_ops(int d);

// Scalar λ with W(a,b)·W(a′,b′)·W(a,b)†·W(a′,b′)† = λ·I for Weyl words
// W(a,b) = clockᵃ·shiftᵇ.  Throws NotScalar if the commutator is not a
// scalar matrix (it always is; the guard is part of the verification).
std::complex<double> weyl_commutator_phase(int d, long a, long b, long ap, long bp);

// Adjoint rotation of U ∈ SU(2): R_ij = ½ tr(σ_i U σ_j U†).  Throws NotSU2
// when U fails unitarity or det = 1 beyond 1e-10.
Eigen::Matrix3d su2_to_so3(const Eigen::Matrix2cd& u);

// A fixed section of su2_to_so3: for each R ∈ SO(3) returns one of the two
// preimages, chosen by a hemisphere rule on the quaternion (w > 0, with a
// deterministic axis convention for π-rotations).  Throws LiftFailure when
// the input is too far from a rotation matrix to orient.
Eigen::Matrix2cd so3_section(const Eigen::Matrix3d& r);

struct SectionSignReport {
  long samples = 0;
  long minus_count = 0;        // pairs with section(R1)·section(R2) = −section(R1R2)
  long cocycle_triples = 0;
  bool cocycle_ok = true;      // ε(R1,R2)ε(R1R2,R3) = ε(R2,R3)ε(R1,R2R3) throughout
  double max_lift_residual = 0;
};

// Samples pairs and triples of rotations and audits the ±1 multiplier picked
// up by the section, including the 2-cocycle identity it must satisfy.
SectionSignReport so3_section_sign_audit(long samples, unsigned long seed = 0);

struct Check {
  std::string name;
  bool pass = false;
  double max_residual = 0;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_pass() const;
};

// Weyl pair in dimension d: unitarity, shift order, the braiding relation
// CS = ζSC, and the commutator phase formula e^{2πi(ab′−a′b)/d} over all
// exponent quadruples.
CheckReport weyl_report(int d);

// Randomized audit of the 2:1 covering SU(2) → SO(3): image properties,
// homomorphism, kernel {±1}, section round-trip, and the sign cocycle.
CheckReport su2so3_report(long samples = 1000, unsigned long seed = 0);

// Randomized audit of the ray/density-matrix correspondence in dimension
// `dim`: density-matrix axioms, invariances, and the round-trip bijection.
CheckReport rays_report(int dim = 4, long samples = 200, unsigned long seed = 0);

// Haar-ish random elements used by the audits (quaternion-uniform for SU(2)
// and SO(3); Ginibre + QR with phase fixing for U(d)).
Eigen::Matrix2cd random_su2(std::mt19937_64& rng);
Eigen::Matrix3d random_rotation(std::mt19937_64& rng);
CMatrix random_unitary(int d, std::mt19937_64& rng);

}  // namespace liesym::verify
