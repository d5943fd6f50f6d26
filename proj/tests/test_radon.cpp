#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3radon/quadrature.hpp"
#include "so3radon/radon.hpp"
#include "so3radon/random.hpp"

using namespace so3radon;

namespace {

SO3Spectrum constant_one(int K = 0) {
  SO3Spectrum f(K);
  f[0](0, 0) = 1.0;
  return f;
}

SO3Spectrum basis(int k, int i, int j) {
  SO3Spectrum f(k);
  f[k](i, j) = 1.0;
  return f;
}

Vec3 geodesic(const Vec3& x, const Vec3& dir, double h) { return std::cos(h) * x + std::sin(h) * dir; }

// Laplace-Beltrami on S^2 by second differences along two orthogonal geodesics.
template <class F>
Complex sphere_laplacian(const F& u, const Vec3& x, double h) {
  Vec3 e1 = x.unitOrthogonal();
  Vec3 e2 = x.cross(e1);
  Complex s = 0.0;
  for (const Vec3& e : {e1, e2}) s += (u(geodesic(x, e, h)) - 2.0 * u(x) + u(geodesic(x, e, -h))) / (h * h);
  return s;
}

}  // namespace

TEST_CASE("forward transform constants") {
  const PairSpectrum G = radon_forward_spectral(constant_one());
  CHECK(std::abs(G[0](0, 0) - kFourPi) < 1e-15);
  Rng rng(1);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(std::abs(eval_pair(G, random_unit_vector(rng), random_unit_vector(rng)) - 1.0) < 1e-14);
  SO3Spectrum f(1);
  f[1] = CMatrix::Identity(3, 3);
  const PairSpectrum G1 = radon_forward_spectral(f);
  CHECK((G1[1] - (kFourPi / 3) * CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("forward and invert round trips") {
  Rng rng(2);
  for (int K : {5, 8}) {
    const SO3Spectrum f = random_spectrum(K, rng);
    CHECK(max_block_error(radon_invert(radon_forward_spectral(f)), f) < 1e-12);
  }
  PairSpectrum G(0);
  G[0](0, 0) = kFourPi;
  CHECK(max_block_error(radon_invert(G), constant_one()) < 1e-15);
  CHECK(max_abs_coefficient(radon_invert(PairSpectrum(4))) == 0.0);
}

TEST_CASE("circle average calibration: degree-1 Wigner functions") {
  // The forward image of T^1_ij is (4pi/3) Y^i(x) conj(Y^j(y)); with the circle
  // average normalized to total mass 1 this holds with no further factor.
  CHECK(kCircleAverageScale == 1.0);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Complex numeric = radon_forward_numeric(basis(1, i, j), x, y, 8);
        const Complex expected = kFourPi / 3 * sph_harm(1, i - 1, x) * std::conj(sph_harm(1, j - 1, y));
        CHECK(std::abs(numeric - expected) < 1e-10);
      }
  }
}

TEST_CASE("circle average of a constant and node doubling") {
  Rng rng(4);
  const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
  CHECK(std::abs(radon_forward_numeric(constant_one(), x, y, 4) - 1.0) < 1e-15);
  const SO3Spectrum f = random_spectrum(5, rng);
  const Complex a = radon_forward_numeric(f, x, y, 12);
  const Complex b = radon_forward_numeric(f, x, y, 24);
  CHECK(std::abs(a - b) < 1e-12 * (1 + std::abs(a)));
  CHECK_THROWS_AS(radon_forward_numeric(f, x, Vec3(-x), 12), AntipodalPairError);
}

TEST_CASE("numeric and spectral forward agree") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = trial % 7;
    const SO3Spectrum f = random_spectrum(K, rng);
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    const Complex numeric = radon_forward_numeric(f, x, y, 2 * K + 2);
    const Complex spectral = eval_pair(radon_forward_spectral(f), x, y);
    CHECK(std::abs(numeric - spectral) < 1e-9);
  }
}

TEST_CASE("adjoint") {
  CHECK(sobolev_weight(3, 2.0) == doctest::Approx(49.0));
  CHECK(1 + 2 * 2 * 3 * 4 == 49);
  const SO3Spectrum one = radon_adjoint(radon_forward_spectral(constant_one()));
  CHECK(std::abs(one[0](0, 0) / kFourPi - 1.0) < 1e-15);
  Rng rng(6);
  const SO3Spectrum f = random_spectrum(4, rng);
  SO3Spectrum back = radon_adjoint(radon_forward_spectral(f));
  for (auto& b : back.blocks) b /= kFourPi;
  CHECK(max_block_error(back, f) < 1e-10);
}

TEST_CASE("plain L2 pairing relates to the weighted adjoint") {
  // <Rf, G> = <f, R^# G> with R^# G(k) = 4pi G(k); radon_adjoint carries the
  // extra (I - 2 Lap)^{1/2} multiplier 2k+1 and drops the 4pi.
  Rng rng(7);
  const SO3Spectrum f = random_spectrum(3, rng);
  const PairSpectrum G = random_pair_spectrum(3, rng);
  const PairSpectrum Rf = radon_forward_spectral(f);
  Complex lhs = 0.0, rhs = 0.0;
  for (int k = 0; k <= 3; ++k) {
    lhs += (G[k].adjoint() * Rf[k]).trace();
    const CMatrix plain = radon_adjoint(G)[k] * kFourPi / (2.0 * k + 1.0);
    rhs += (plain.adjoint() * f[k]).trace() / (2.0 * k + 1.0);
  }
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
}

TEST_CASE("Sobolev norms and the isometry") {
  CHECK(sobolev_norm_so3(constant_one(), 0.0) == doctest::Approx(1.0));
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const SO3Spectrum f = random_spectrum(6, rng);
    const PairSpectrum G = radon_forward_spectral(f);
    CHECK(std::abs(std::sqrt(l2_norm_squared(f)) - sobolev_norm_pair(G, 0.5) / kFourPi) <
          1e-10 * std::sqrt(l2_norm_squared(f)));
    CHECK(std::abs(sobolev_norm_pair(G, 0.0) - std::sqrt(l2_norm_squared(G))) < 1e-12 * sobolev_norm_pair(G, 0.0));
  }
  // the ratio |Rf|_{t+1/2} / |f|_t stays between fixed bounds for every K
  for (double t : {-1.0, 0.0, 0.5, 2.0})
    for (int K = 0; K <= 12; ++K) {
      const SO3Spectrum f = random_spectrum(K, rng);
      const double ratio = sobolev_norm_pair(radon_forward_spectral(f), t + 0.5) / sobolev_norm_so3(f, t);
      CHECK(ratio == doctest::Approx(kFourPi).epsilon(1e-12));
    }
}

TEST_CASE("X-ray transform kills odd degrees") {
  for (int k = 1; k <= 7; k += 2)
    for (int i = 0; i < 2 * k + 1; ++i)
      for (int j = 0; j < 2 * k + 1; ++j) CHECK(max_abs_coefficient(xray_forward(basis(k, i, j))) == 0.0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const SO3Spectrum f = basis(2, i, j);
      CHECK(max_block_error(xray_forward(f), radon_forward_spectral(f)) == 0.0);
    }
  const PairSpectrum P1 = xray_forward(constant_one());
  Rng rng(9);
  CHECK(std::abs(eval_pair(P1, random_unit_vector(rng), random_unit_vector(rng)) - 1.0) < 1e-14);
}

TEST_CASE("X-ray transform pointwise: Friedel symmetry and the symmetrized Radon value") {
  Rng rng(10);
  const SO3Spectrum f = random_spectrum(5, rng);
  const PairSpectrum R = radon_forward_spectral(f);
  const PairSpectrum P = xray_forward(f);
  const PairSpectrum Pe = xray_forward(even_part(f));
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    CHECK(std::abs(eval_pair(P, x, y) - 0.5 * (eval_pair(R, x, y) + eval_pair(R, Vec3(-x), y))) < 1e-11);
    CHECK(std::abs(eval_pair(Pe, x, y) - eval_pair(Pe, Vec3(-x), y)) < 1e-11);
    const Complex numeric =
        0.5 * (radon_forward_numeric(f, x, y, 12) + radon_forward_numeric(f, Vec3(-x), y, 12));
    CHECK(std::abs(numeric - eval_pair(P, x, y)) < 1e-10);
  }
}

TEST_CASE("even part and the kernel of P") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int K = trial % 9;
    const SO3Spectrum f = random_spectrum(K, rng);
    CHECK(max_block_error(radon_invert(xray_forward(f)), even_part(f)) < 1e-12);
    CHECK(max_block_error(even_part(even_part(f)), even_part(f)) == 0.0);
    CHECK(max_abs_coefficient(even_part(odd_part(f))) == 0.0);
    // P f = 0 exactly when the even part vanishes
    CHECK(max_abs_coefficient(xray_forward(odd_part(f))) == 0.0);
    if (max_abs_coefficient(even_part(f)) > 0) CHECK(max_abs_coefficient(xray_forward(f)) > 0.0);
  }
}

TEST_CASE("range: the two partial Laplacians agree on Rf") {
  Rng rng(12);
  const SO3Spectrum f = random_spectrum(4, rng);
  const PairSpectrum G = radon_forward_spectral(f);
  CHECK(max_block_error(laplacian_first(G), laplacian_second(G)) == 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    const Complex lx = sphere_laplacian([&](const Vec3& p) { return eval_pair(G, p, y); }, x, 1e-4);
    const Complex ly = sphere_laplacian([&](const Vec3& p) { return eval_pair(G, x, p); }, y, 1e-4);
    CHECK(std::abs(lx - ly) < 1e-4 * (1 + std::abs(lx)));
  }
}

TEST_CASE("left translation rotates the first argument") {
  Rng rng(13);
  const SO3Spectrum f = random_spectrum(4, rng);
  const RotationMatrix g0 = random_rotation(rng);
  const SO3Spectrum f1 = left_translate(f, g0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    const Complex lhs = radon_forward_numeric(f1, x, y, 10);
    const Complex rhs = radon_forward_numeric(f, Vec3(g0.inverse() * x), y, 10);
    CHECK(std::abs(lhs - rhs) < 1e-9);
    CHECK(std::abs(eval_pair(radon_forward_spectral(f1), x, y) - eval_pair(radon_forward_spectral(f), Vec3(g0.inverse() * x), y)) < 1e-9);
  }
}

TEST_CASE("quadrature analysis of the circle average recovers the forward spectrum") {
  Rng rng(14);
  const int K = 3;
  const SO3Spectrum f = random_spectrum(K, rng);
  const SphereQuadrature qx = sphere_quadrature(2 * K);
  SphereQuadrature qy = sphere_quadrature(2 * K);
  // rotate the second grid so no node pair is antipodal
  const Mat3 tilt = rot_z(0.3) * rot_x(0.2);
  for (auto& p : qy.nodes) p = tilt * p;
  const PairSpectrum G = analyze_pair(
      [&](const Vec3& x, const Vec3& y) { return radon_forward_numeric(f, x, y, 2 * K + 2); }, K, qx, qy);
  CHECK(max_block_error(G, radon_forward_spectral(f)) < 1e-10);
}
