#pragma once

#include <functional>
#include <vector>

#include "so3radon/harmonics.hpp"

namespace so3radon {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule on [-1, 1], exact to degree 2n - 1.
GaussLegendre gauss_legendre(int n);

enum class QuadratureSpace { kSphere, kRotationGroup };

// Lebesgue measure on S^2 (total 4 pi).
struct SphereQuadrature {
  static constexpr QuadratureSpace space = QuadratureSpace::kSphere;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
};

// Normalized Haar measure on SO(3) (total 1).
struct HaarQuadrature {
  static constexpr QuadratureSpace space = QuadratureSpace::kRotationGroup;
  std::vector<EulerAngles> nodes;
  std::vector<double> weights;
  int exact_degree = 0;  // exact for T^k conj(T^l), k, l <= exact_degree
};

// Gauss-Legendre in cos(theta) times uniform longitude; exact for Y_k, k <= K.
SphereQuadrature sphere_quadrature(int K);
// Uniform alpha, gamma (2K+1 each) and Gauss-Legendre in cos(beta) (K+1 nodes).
HaarQuadrature haar_quadrature(int K);

// Coefficients of a degree-K function from its values at rule.nodes.
SO3Spectrum analyze_so3(const std::vector<Complex>& samples, const HaarQuadrature& rule, int K);
SO3Spectrum analyze_so3(const std::function<Complex(const EulerAngles&)>& f, const HaarQuadrature& rule,
                        int K);
std::vector<Complex> synth_on_rule(const SO3Spectrum& f, const HaarQuadrature& rule);

// Coefficients G(k)_ij = int int G conj(Y^i(x)) Y^j(y) of a function on S^2 x S^2,
// restricted to the degree-diagonal blocks.
PairSpectrum analyze_pair(const std::function<Complex(const Vec3&, const Vec3&)>& g, int K,
                          const SphereQuadrature& rule_x, const SphereQuadrature& rule_y);

}  // namespace so3radon
