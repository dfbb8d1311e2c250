#include "liesym/group_cocycle.hpp"

#include <array>

namespace liesym {

namespace {

// Row-major 3×3 rotation from a unit quaternion (w, x, y, z).
std::array<double, 9> rotation_from_quaternion(double w, double x, double y, double z) {
  return {1 - 2 * (y * y + z * z), 2 * (x * y + w * z),     2 * (x * z - w * y),
          2 * (x * y - w * z),     1 - 2 * (x * x + z * z), 2 * (y * z + w * x),
          2 * (x * z + w * y),     2 * (y * z - w * x),     1 - 2 * (x * x + y * y)};
}

}  // namespace

ExactGroupLaw make_heisenberg_law(int n) {
  if (n < 1) throw BadParams("heisenberg law needs n >= 1, got " + std::to_string(n));
  ExactGroupLaw law;
  law.name = "heisenberg(" + std::to_string(n) + ")";
  law.element_size = 2 * n;
  law.central_dim = 1;
  law.identity = [n] { return ExactGroupLaw::Element(static_cast<std::size_t>(2 * n), Rational(0)); };
  law.multiply = [n](const ExactGroupLaw::Element& a, const ExactGroupLaw::Element& b) {
    ExactGroupLaw::Element out(static_cast<std::size_t>(2 * n));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
  };
  law.cocycle = [n](const ExactGroupLaw::Element& a, const ExactGroupLaw::Element& b) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
      const auto xi = static_cast<std::size_t>(i);
      const auto yi = static_cast<std::size_t>(n + i);
      acc += a[xi] * b[yi] - a[yi] * b[xi];
    }
    return std::vector<Rational>{acc / 2};
  };
  law.sample = [n](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    ExactGroupLaw::Element out(static_cast<std::size_t>(2 * n));
    for (auto& v : out) v = Rational(num(rng), den(rng));
    return out;
  };
  normalize_cocycle(law);
  return law;
}

NumericGroupLaw make_bargmann_law() {
  // Element layout: R row-major (9), v (3), a (3), t (1).
  NumericGroupLaw law;
  law.name = "bargmann";
  law.element_size = 16;
  law.central_dim = 1;
  law.identity = [] {
    NumericGroupLaw::Element e(16, 0.0);
    e[0] = e[4] = e[8] = 1.0;
    return e;
  };
  law.multiply = [](const NumericGroupLaw::Element& g1, const NumericGroupLaw::Element& g2) {
    NumericGroupLaw::Element out(16, 0.0);
    // R = R1 R2
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        double acc = 0;
        for (int k = 0; k < 3; ++k) acc += g1[static_cast<std::size_t>(3 * r + k)] *
                                           g2[static_cast<std::size_t>(3 * k + c)];
        out[static_cast<std::size_t>(3 * r + c)] = acc;
      }
    }
    // v = v1 + R1 v2, a = a1 + R1 a2 + v1 t2, t = t1 + t2
    const double t2 = g2[15];
    for (int r = 0; r < 3; ++r) {
      double rv = 0;
      double ra = 0;
      for (int k = 0; k < 3; ++k) {
        rv += g1[static_cast<std::size_t>(3 * r + k)] * g2[static_cast<std::size_t>(9 + k)];
        ra += g1[static_cast<std::size_t>(3 * r + k)] * g2[static_cast<std::size_t>(12 + k)];
      }
      out[static_cast<std::size_t>(9 + r)] = g1[static_cast<std::size_t>(9 + r)] + rv;
      out[static_cast<std::size_t>(12 + r)] =
          g1[static_cast<std::size_t>(12 + r)] + ra + g1[static_cast<std::size_t>(9 + r)] * t2;
    }
    out[15] = g1[15] + t2;
    return out;
  };
  law.cocycle = [](const NumericGroupLaw::Element& g1, const NumericGroupLaw::Element& g2) {
    const double v1sq = g1[9] * g1[9] + g1[10] * g1[10] + g1[11] * g1[11];
    double dot = 0;
    for (int r = 0; r < 3; ++r) {
      double ra = 0;
      for (int k = 0; k < 3; ++k) ra += g1[static_cast<std::size_t>(3 * r + k)] *
                                        g2[static_cast<std::size_t>(12 + k)];
      dot += g1[static_cast<std::size_t>(9 + r)] * ra;
    }
    return std::vector<double>{0.5 * v1sq * g2[15] + dot};
  };
  law.sample = [](std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double norm = std::sqrt(w * w + x * x + y * y + z * z);
    w /= norm;
    x /= norm;
    y /= norm;
    z /= norm;
    const auto rot = rotation_from_quaternion(w, x, y, z);
    NumericGroupLaw::Element out(16, 0.0);
    for (int i = 0; i < 9; ++i) out[static_cast<std::size_t>(i)] = rot[static_cast<std::size_t>(i)];
    for (int i = 9; i < 16; ++i) out[static_cast<std::size_t>(i)] = unit(rng);
    return out;
  };
  normalize_cocycle(law);
  return law;
}

}  // namespace liesym
