#include "liesym/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "liesym/errors.hpp"

namespace liesym::verify {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -kI, kI, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;
};

// SU(2) element wI + i(xσ₁ + yσ₂ + zσ₃).
Eigen::Matrix2cd su2_from_quaternion(const Quaternion& q) {
  Eigen::Matrix2cd u;
  u << std::complex<double>(q.w, q.z), std::complex<double>(q.y, q.x),
      std::complex<double>(-q.y, q.x), std::complex<double>(q.w, -q.z);
  return u;
}

// The rotation su2_to_so3(su2_from_quaternion(q)); inverse of the extraction
// in so3_section.
Eigen::Matrix3d rotation_from_quaternion(const Quaternion& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y + w * z), 2 * (x * z - w * y),
      2 * (x * y - w * z), 1 - 2 * (x * x + z * z), 2 * (y * z + w * x),
      2 * (x * z + w * y), 2 * (y * z - w * x), 1 - 2 * (x * x + y * y);
  return r;
}

Quaternion random_unit_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  q.w /= n;
  q.x /= n;
  q.y /= n;
  q.z /= n;
  return q;
}

double max_abs(const CMatrix& m) {
  double out = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j)));
  }
  return out;
}

}  // namespace

CMatrix ray_to_density(const CVector& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw ZeroVector("ray_to_density: zero state vector");
  return (psi * psi.adjoint()) / n2;
}

double transition_probability(const CVector& psi, const CVector& phi) {
  const double np = psi.squaredNorm();
  const double nq = phi.squaredNorm();
  if (!(np > 0.0) || !(nq > 0.0)) throw ZeroVector("transition_probability: zero state vector");
  const std::complex<double> inner = phi.adjoint() * psi;
  return std::norm(inner) / (np * nq);
}

std::pair<CMatrix, CMatrix> weyl_ops(int d) {
  if (d < 2) throw BadDimension("weyl_ops: need dimension >= 2, got " + std::to_string(d));
  CMatrix clock = CMatrix::Zero(d, d);
  CMatrix shift = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / d;
    clock(j, j) = std::polar(1.0, theta);
    shift((j + 1) % d, j) = 1.0;
  }
  return {std::move(clock), std::move(shift)};
}

std::complex<double> weyl_commutator_phase(int d, long a, long b, long ap, long bp) {
  if (d < 2) throw BadDimension("weyl_commutator_phase: need dimension >= 2");
  const auto [clock, shift] = weyl_ops(d);
  const auto power = [d](const CMatrix& m, long e) {
    CMatrix acc = CMatrix::Identity(d, d);
    const long reduced = ((e % d) + d) % d;
    for (long i = 0; i < reduced; ++i) acc = acc * m;
    return acc;
  };
  const CMatrix w1 = power(clock, a) * power(shift, b);
  const CMatrix w2 = power(clock, ap) * power(shift, bp);
  const CMatrix comm = w1 * w2 * w1.adjoint() * w2.adjoint();

  const std::complex<double> scalar = comm(0, 0);
  double off = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const std::complex<double> expect = i == j ? scalar : 0.0;
      off = std::max(off, std::abs(comm(i, j) - expect));
    }
  }
  if (off > 1e-10) {
    throw NotScalar("weyl_commutator_phase: commutator deviates from a scalar matrix by " +
                    std::to_string(off));
  }
  return scalar;
}

Eigen::Matrix3d su2_to_so3(const Eigen::Matrix2cd& u) {
  const double unitary_residual = max_abs(u.adjoint() * u - Eigen::Matrix2cd::Identity());
  const double det_residual = std::abs(u.determinant() - 1.0);
  if (unitary_residual > 1e-10 || det_residual > 1e-10) {
    throw NotSU2("su2_to_so3: input off SU(2) by unitarity " + std::to_string(unitary_residual) +
                 ", det " + std::to_string(det_residual));
  }
  const auto& sigma = pauli();
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (sigma[static_cast<std::size_t>(i)] * u * sigma[static_cast<std::size_t>(j)] *
                       u.adjoint())
                          .trace()
                          .real();
    }
  }
  return r;
}

Eigen::Matrix2cd so3_section(const Eigen::Matrix3d& r) {
  const double t = r.trace();
  Quaternion q;
  // Shepperd-style extraction against the largest of (1+t, 1+2r_ii−t); the
  // formulas invert rotation_from_quaternion above.
  const std::array<double, 4> gauge = {1 + t, 1 + 2 * r(0, 0) - t, 1 + 2 * r(1, 1) - t,
                                       1 + 2 * r(2, 2) - t};
  const auto best =
      static_cast<int>(std::max_element(gauge.begin(), gauge.end()) - gauge.begin());
  switch (best) {
    case 0: {
      q.w = 0.5 * std::sqrt(std::max(0.0, gauge[0]));
      q.x = (r(1, 2) - r(2, 1)) / (4 * q.w);
      q.y = (r(2, 0) - r(0, 2)) / (4 * q.w);
      q.z = (r(0, 1) - r(1, 0)) / (4 * q.w);
      break;
    }
    case 1: {
      q.x = 0.5 * std::sqrt(std::max(0.0, gauge[1]));
      q.w = (r(1, 2) - r(2, 1)) / (4 * q.x);
      q.y = (r(0, 1) + r(1, 0)) / (4 * q.x);
      q.z = (r(0, 2) + r(2, 0)) / (4 * q.x);
      break;
    }
    case 2: {
      q.y = 0.5 * std::sqrt(std::max(0.0, gauge[2]));
      q.w = (r(2, 0) - r(0, 2)) / (4 * q.y);
      q.x = (r(0, 1) + r(1, 0)) / (4 * q.y);
      q.z = (r(1, 2) + r(2, 1)) / (4 * q.y);
      break;
    }
    default: {
      q.z = 0.5 * std::sqrt(std::max(0.0, gauge[3]));
      q.w = (r(0, 1) - r(1, 0)) / (4 * q.z);
      q.x = (r(0, 2) + r(2, 0)) / (4 * q.z);
      q.y = (r(1, 2) + r(2, 1)) / (4 * q.z);
      break;
    }
  }
  const double norm = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  if (!(norm > 0.5) || !(norm < 2.0)) {
    throw LiftFailure("so3_section: quaternion extraction degenerated (norm " +
                      std::to_string(norm) + "); input is not a rotation matrix");
  }
  q.w /= norm;
  q.x /= norm;
  q.y /= norm;
  q.z /= norm;

  // Hemisphere rule: w > 0; for π-rotations (w ≈ 0) make the first
  // significant axis component positive.
  double signer = q.w;
  if (std::abs(signer) <= 1e-9) {
    signer = 0.0;
    for (const double c : {q.x, q.y, q.z}) {
      if (std::abs(c) > 1e-9) {
        signer = c;
        break;
      }
    }
    if (signer == 0.0) {
      throw LiftFailure("so3_section: cannot orient a π-rotation with vanishing axis");
    }
  }
  if (signer < 0) {
    q.w = -q.w;
    q.x = -q.x;
    q.y = -q.y;
    q.z = -q.z;
  }
  return su2_from_quaternion(q);
}

SectionSignReport so3_section_sign_audit(long samples, unsigned long seed) {
  if (samples < 1) throw BadParams("so3_section_sign_audit: need samples >= 1");
  std::mt19937_64 rng(seed);
  SectionSignReport report;
  report.samples = samples;

  const auto epsilon = [&report](const Eigen::Matrix3d& r1, const Eigen::Matrix3d& r2) {
    const Eigen::Matrix2cd u1 = so3_section(r1);
    const Eigen::Matrix2cd u2 = so3_section(r2);
    const Eigen::Matrix2cd u12 = so3_section(r1 * r2);
    const Eigen::Matrix2cd prod = u1 * u2;
    const double plus = max_abs(prod - u12);
    const double minus = max_abs(prod + u12);
    const int sign = plus <= minus ? 1 : -1;
    report.max_lift_residual = std::max(report.max_lift_residual, std::min(plus, minus));
    return sign;
  };

  for (long s = 0; s < samples; ++s) {
    const Eigen::Matrix3d r1 = random_rotation(rng);
    const Eigen::Matrix3d r2 = random_rotation(rng);
    if (epsilon(r1, r2) < 0) ++report.minus_count;
  }

  report.cocycle_triples = samples;
  for (long s = 0; s < samples; ++s) {
    const Eigen::Matrix3d r1 = random_rotation(rng);
    const Eigen::Matrix3d r2 = random_rotation(rng);
    const Eigen::Matrix3d r3 = random_rotation(rng);
    const int lhs = epsilon(r1, r2) * epsilon(r1 * r2, r3);
    const int rhs = epsilon(r2, r3) * epsilon(r1, r2 * r3);
    if (lhs != rhs) report.cocycle_ok = false;
  }
  return report;
}

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CheckReport weyl_report(int d) {
  const auto [clock, shift] = weyl_ops(d);
  const CMatrix id = CMatrix::Identity(d, d);
  CheckReport report;

  const auto add = [&report](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual <= tol, residual});
  };

  add("clock_unitary", max_abs(clock.adjoint() * clock - id), 1e-12);
  add("shift_unitary", max_abs(shift.adjoint() * shift - id), 1e-12);

  CMatrix shift_d = id;
  for (int i = 0; i < d; ++i) shift_d = shift_d * shift;
  add("shift_order_d", max_abs(shift_d - id), 1e-12);

  const std::complex<double> zeta = std::polar(1.0, 2.0 * std::numbers::pi / d);
  add("clock_shift_braiding", max_abs(clock * shift - zeta * (shift * clock)), 1e-12);

  // The witness pair (a,b) = (1,0), (a',b') = (0,1): phase e^{2πi/d}, which
  // is −1 exactly when d = 2.
  const std::string expected_name = d == 2 ? "-1" : "exp(2*pi*i/" + std::to_string(d) + ")";
  add("witness_phase_(1,0)(0,1)_equals_" + expected_name,
      std::abs(weyl_commutator_phase(d, 1, 0, 0, 1) - zeta), 1e-12);

  double worst = 0;
  bool scalar_ok = true;
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      for (long ap = 0; ap < d; ++ap) {
        for (long bp = 0; bp < d; ++bp) {
          try {
            const std::complex<double> phase = weyl_commutator_phase(d, a, b, ap, bp);
            const long k = (((a * bp - ap * b) % d) + d) % d;
            const std::complex<double> expect = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
            worst = std::max(worst, std::abs(phase - expect));
          } catch (const NotScalar&) {
            scalar_ok = false;
          }
        }
      }
    }
  }
  report.checks.push_back({"commutator_phase_formula", scalar_ok && worst <= 1e-12, worst});
  return report;
}

CheckReport su2so3_report(long samples, unsigned long seed) {
  if (samples < 1) throw BadParams("su2so3_report: need samples >= 1");
  std::mt19937_64 rng(seed);
  CheckReport report;

  double orth = 0, det = 0, hom = 0, kernel = 0, roundtrip = 0;
  for (long s = 0; s < samples; ++s) {
    const Eigen::Matrix2cd u1 = random_su2(rng);
    const Eigen::Matrix2cd u2 = random_su2(rng);
    const Eigen::Matrix3d r1 = su2_to_so3(u1);
    const Eigen::Matrix3d r2 = su2_to_so3(u2);
    orth = std::max(orth, (r1.transpose() * r1 - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
    det = std::max(det, std::abs(r1.determinant() - 1.0));
    hom = std::max(hom, (su2_to_so3(u1 * u2) - r1 * r2).cwiseAbs().maxCoeff());
    kernel = std::max(kernel, (su2_to_so3(-u1) - r1).cwiseAbs().maxCoeff());
    roundtrip = std::max(roundtrip, (su2_to_so3(so3_section(r2)) - r2).cwiseAbs().maxCoeff());
  }
  report.checks.push_back({"image_orthogonal", orth <= 1e-10, orth});
  report.checks.push_back({"image_det_one", det <= 1e-10, det});
  report.checks.push_back({"homomorphism", hom <= 1e-9, hom});
  report.checks.push_back({"kernel_plus_minus", kernel <= 1e-12, kernel});
  report.checks.push_back({"section_roundtrip", roundtrip <= 1e-9, roundtrip});

  const SectionSignReport signs = so3_section_sign_audit(samples, seed + 1);
  report.checks.push_back({"section_lift_residual", signs.max_lift_residual <= 1e-9,
                           signs.max_lift_residual});
  const double minus_fraction =
      static_cast<double>(signs.minus_count) / static_cast<double>(signs.samples);
  report.checks.push_back(
      {"section_sign_flips", signs.samples < 100 || signs.minus_count > 0, minus_fraction});
  report.checks.push_back({"sign_cocycle_identity", signs.cocycle_ok, 0.0});
  return report;
}

CheckReport rays_report(int dim, long samples, unsigned long seed) {
  if (dim < 1) throw BadDimension("rays_report: need dim >= 1");
  if (samples < 1) throw BadParams("rays_report: need samples >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  CheckReport report;

  const auto random_state = [&] {
    CVector psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = std::complex<double>(gauss(rng), gauss(rng));
    if (psi.norm() < 1e-6) psi(0) = 1.0;
    return psi;
  };

  double hermitian = 0, trace = 0, psd = 0, idem = 0, phase_inv = 0, scale_inv = 0;
  double symmetry = 0, range = 0, unitary_inv = 0, roundtrip = 0;
  for (long s = 0; s < samples; ++s) {
    const CVector psi = random_state();
    const CVector phi = random_state();
    const CMatrix rho = ray_to_density(psi);

    hermitian = std::max(hermitian, max_abs(rho - rho.adjoint()));
    trace = std::max(trace, std::abs(rho.trace() - 1.0));
    idem = std::max(idem, max_abs(rho * rho - rho));

    Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho);
    psd = std::max(psd, std::max(0.0, -eig.eigenvalues().minCoeff()));

    const std::complex<double> phase = std::polar(1.0, angle(rng));
    phase_inv = std::max(phase_inv, max_abs(ray_to_density(CVector(phase * psi)) - rho));
    const double lambda = 0.25 + 3.0 * std::abs(gauss(rng));
    scale_inv = std::max(scale_inv, max_abs(ray_to_density(CVector(lambda * psi)) - rho));

    const double p = transition_probability(psi, phi);
    symmetry = std::max(symmetry, std::abs(p - transition_probability(phi, psi)));
    range = std::max(range, std::max(-p, p - 1.0));

    const CMatrix u = random_unitary(dim, rng);
    unitary_inv =
        std::max(unitary_inv, std::abs(transition_probability(CVector(u * psi), CVector(u * phi)) - p));

    // Bijection onto rank-1 projectors: the leading eigenvector recovers the ray.
    const CVector leading = eig.eigenvectors().col(dim - 1);
    roundtrip = std::max(roundtrip, std::abs(transition_probability(psi, leading) - 1.0));
  }
  report.checks.push_back({"density_hermitian", hermitian <= 1e-12, hermitian});
  report.checks.push_back({"density_trace_one", trace <= 1e-12, trace});
  report.checks.push_back({"density_psd", psd <= 1e-10, psd});
  report.checks.push_back({"density_idempotent", idem <= 1e-10, idem});
  report.checks.push_back({"phase_invariance", phase_inv <= 1e-12, phase_inv});
  report.checks.push_back({"scale_invariance", scale_inv <= 1e-12, scale_inv});
  report.checks.push_back({"transition_symmetric", symmetry <= 1e-12, symmetry});
  report.checks.push_back({"transition_in_range", range <= 1e-12, range});
  report.checks.push_back({"unitary_invariance", unitary_inv <= 1e-10, unitary_inv});
  report.checks.push_back({"ray_roundtrip_bijection", roundtrip <= 1e-10, roundtrip});
  return report;
}

Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
  return su2_from_quaternion(random_unit_quaternion(rng));
}

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  return rotation_from_quaternion(random_unit_quaternion(rng));
}

CMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  }
  const Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const std::complex<double> rii = r(i, i);
    const std::complex<double> s = std::abs(rii) > 0 ? rii / std::abs(rii) : 1.0;
    q.col(i) *= s;
  }
  return q;
}

}  // namespace liesym::verify
