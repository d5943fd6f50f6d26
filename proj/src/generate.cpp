#include <cmath>

#include "so3radon/quadrature.hpp"
#include "so3radon/random.hpp"

namespace so3radon {

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    Vec3 v(n(rng), n(rng), n(rng));
    const double r = v.norm();
    if (r > 1e-8) return v / r;
  }
}

UnitQuaternion random_unit_quaternion(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    Quaternion q{n(rng), n(rng), n(rng), n(rng)};
    if (q.norm() > 1e-8) return UnitQuaternion(q);
  }
}

RotationMatrix random_rotation(Rng& rng) { return tau(random_unit_quaternion(rng)); }

EulerAngles random_euler(Rng& rng) { return euler_from_matrix(random_rotation(rng)); }

SO3Spectrum make_real(const SO3Spectrum& f) {
  SO3Spectrum r = f;
  for (int k = 0; k <= f.bandwidth(); ++k) {
    const int n = 2 * k + 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double sign = ((a - b) % 2 == 0) ? 1.0 : -1.0;
        r[k](a, b) = 0.5 * (f[k](a, b) + sign * std::conj(f[k](n - 1 - a, n - 1 - b)));
      }
  }
  return r;
}

SO3Spectrum random_spectrum(int K, Rng& rng, bool real_valued) {
  std::normal_distribution<double> n;
  SO3Spectrum f(K);
  for (int k = 0; k <= K; ++k)
    for (int a = 0; a < 2 * k + 1; ++a)
      for (int b = 0; b < 2 * k + 1; ++b) f[k](a, b) = Complex(n(rng), n(rng));
  return real_valued ? make_real(f) : f;
}

PairSpectrum random_pair_spectrum(int K, Rng& rng) {
  std::normal_distribution<double> n;
  PairSpectrum g(K);
  for (int k = 0; k <= K; ++k)
    for (int a = 0; a < 2 * k + 1; ++a)
      for (int b = 0; b < 2 * k + 1; ++b) g[k](a, b) = Complex(n(rng), n(rng));
  return g;
}

SO3Spectrum generate_odf(int K, std::uint64_t seed, bool nonneg) {
  if (K < 0) throw DomainError("negative bandwidth");
  Rng rng(seed);
  SO3Spectrum f0 = random_spectrum(K, rng, true);
  if (!nonneg) {
    f0[0](0, 0) = 1.0;
    return f0;
  }
  const HaarQuadrature rule = haar_quadrature(2 * K);
  std::vector<Complex> values = synth_on_rule(f0, rule);
  for (auto& v : values) v = std::norm(v.real());
  SO3Spectrum f = make_real(analyze_so3(values, rule, 2 * K));
  const double mass = f[0](0, 0).real();
  if (!(mass > 0)) throw DomainError("squared density has zero mass");
  for (auto& b : f.blocks) b /= mass;
  f[0](0, 0) = 1.0;
  return f;
}

}  // namespace so3radon
