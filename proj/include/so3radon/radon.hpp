#pragma once

#include <functional>

#include "so3radon/harmonics.hpp"
#include "so3radon/rotations.hpp"

namespace so3radon {

// Multiplier on the circle average (1/2pi) int f(tau(q(t))) dt. Fixed by the
// degree-1 calibration test; the circle average needs no extra factor.
inline constexpr double kCircleAverageScale = 1.0;

// Ghat(k) = 4pi/(2k+1) fhat(k).
PairSpectrum radon_forward_spectral(const SO3Spectrum& f);
// fhat(k) = (2k+1)/(4pi) Ghat(k).
SO3Spectrum radon_invert(const PairSpectrum& G);
// Spectral form of 4pi int (I - 2 Lap)^{1/2} u(g y, y) dy: block k becomes (2k+1) Ghat(k),
// so that (1/4pi) R* R = I. The scale argument replaces 4pi (test hook).
SO3Spectrum radon_adjoint(const PairSpectrum& G, double four_pi = kFourPi);

// Circle average of f over {g : g y = x} with n trapezoid nodes on [0, 2pi).
// Warns on stderr when n < 2K + 2.
Complex radon_forward_numeric(const SO3Spectrum& f, const Vec3& x, const Vec3& y, int n);
// Same integral for an arbitrary function on SO(3).
Complex circle_average(const std::function<Complex(const RotationMatrix&)>& f, const Vec3& x, const Vec3& y,
                       int n);

// Multiplier (1 + 2*2k(k+1))^{t/2} = (2k+1)^t.
double sobolev_weight(int k, double t);
double sobolev_norm_pair(const PairSpectrum& G, double t);
double sobolev_norm_so3(const SO3Spectrum& f, double t);

// Zero all odd-degree blocks.
PairSpectrum xray_from_radon(const PairSpectrum& G);
PairSpectrum xray_forward(const SO3Spectrum& f);
SO3Spectrum even_part(const SO3Spectrum& f);
SO3Spectrum odd_part(const SO3Spectrum& f);

// Pointwise partial Laplacians on S^2 x S^2, spectrally: block k times -k(k+1).
PairSpectrum laplacian_first(const PairSpectrum& G);
PairSpectrum laplacian_second(const PairSpectrum& G);

}  // namespace so3radon
