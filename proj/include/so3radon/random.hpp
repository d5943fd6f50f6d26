#pragma once

#include <cstdint>
#include <random>

#include "so3radon/harmonics.hpp"

namespace so3radon {

using Rng = std::mt19937_64;

Vec3 random_unit_vector(Rng& rng);
UnitQuaternion random_unit_quaternion(Rng& rng);
// Haar-distributed rotation.
RotationMatrix random_rotation(Rng& rng);
EulerAngles random_euler(Rng& rng);

// Gaussian coefficients; with real_valued set, the blocks satisfy
// f(k)_{-a,-b} = (-1)^{a-b} conj(f(k)_{a,b}), so f is real on SO(3).
SO3Spectrum random_spectrum(int K, Rng& rng, bool real_valued = false);
PairSpectrum random_pair_spectrum(int K, Rng& rng);
SO3Spectrum make_real(const SO3Spectrum& f);

// Random spectrum with fhat(0) = [[1]]. With nonneg set, f0 is squared on a Haar
// grid and re-analyzed at bandwidth 2K, so f >= 0 and int f = 1.
SO3Spectrum generate_odf(int K, std::uint64_t seed, bool nonneg);

}  // namespace so3radon
