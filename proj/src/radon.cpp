#include "so3radon/radon.hpp"

#include <cmath>
#include <iostream>

namespace so3radon {

PairSpectrum radon_forward_spectral(const SO3Spectrum& f) {
  f.validate();
  PairSpectrum G(f.bandwidth());
  for (int k = 0; k <= f.bandwidth(); ++k) G[k] = (kFourPi / (2.0 * k + 1.0)) * f[k];
  return G;
}

SO3Spectrum radon_invert(const PairSpectrum& G) {
  G.validate();
  SO3Spectrum f(G.bandwidth());
  for (int k = 0; k <= G.bandwidth(); ++k) f[k] = ((2.0 * k + 1.0) / kFourPi) * G[k];
  return f;
}

SO3Spectrum radon_adjoint(const PairSpectrum& G, double four_pi) {
  G.validate();
  SO3Spectrum f(G.bandwidth());
  for (int k = 0; k <= G.bandwidth(); ++k) f[k] = (four_pi / kFourPi) * (2.0 * k + 1.0) * G[k];
  return f;
}

Complex circle_average(const std::function<Complex(const RotationMatrix&)>& f, const Vec3& x, const Vec3& y,
                       int n) {
  if (n < 1) throw DomainError("circle average needs at least one node");
  const GreatCirclePair c = circle_from_pair(x, y);
  Complex s = 0.0;
  for (int j = 0; j < n; ++j) s += f(tau(circle_point(c, kTwoPi * j / n)));
  return kCircleAverageScale * s / static_cast<double>(n);
}

Complex radon_forward_numeric(const SO3Spectrum& f, const Vec3& x, const Vec3& y, int n) {
  if (n < 2 * f.bandwidth() + 2)
    std::cerr << "warning: " << n << " circle nodes underresolve bandwidth " << f.bandwidth() << "\n";
  return circle_average([&](const RotationMatrix& g) { return synth_so3(f, g); }, x, y, n);
}

double sobolev_weight(int k, double t) { return std::pow(2.0 * k + 1.0, t); }

double sobolev_norm_pair(const PairSpectrum& G, double t) {
  double s = 0.0;
  for (int k = 0; k <= G.bandwidth(); ++k) s += std::pow(sobolev_weight(k, t), 2) * G[k].squaredNorm();
  return std::sqrt(s);
}

double sobolev_norm_so3(const SO3Spectrum& f, double t) {
  double s = 0.0;
  for (int k = 0; k <= f.bandwidth(); ++k)
    s += std::pow(sobolev_weight(k, t), 2) * f[k].squaredNorm() / (2.0 * k + 1.0);
  return std::sqrt(s);
}

PairSpectrum xray_from_radon(const PairSpectrum& G) {
  PairSpectrum P = G;
  for (int k = 1; k <= P.bandwidth(); k += 2) P[k].setZero();
  return P;
}

PairSpectrum xray_forward(const SO3Spectrum& f) { return xray_from_radon(radon_forward_spectral(f)); }

SO3Spectrum even_part(const SO3Spectrum& f) {
  SO3Spectrum e = f;
  for (int k = 1; k <= e.bandwidth(); k += 2) e[k].setZero();
  return e;
}

SO3Spectrum odd_part(const SO3Spectrum& f) {
  SO3Spectrum o = f;
  for (int k = 0; k <= o.bandwidth(); k += 2) o[k].setZero();
  return o;
}

PairSpectrum laplacian_first(const PairSpectrum& G) {
  PairSpectrum out = G;
  for (int k = 0; k <= G.bandwidth(); ++k) out[k] *= -static_cast<double>(k) * (k + 1);
  return out;
}

PairSpectrum laplacian_second(const PairSpectrum& G) { return laplacian_first(G); }

}  // namespace so3radon
