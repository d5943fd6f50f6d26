#pragma once

#include <cstdint>
#include <vector>

#include "so3radon/harmonics.hpp"

namespace so3radon {

struct LatticeCertificate {
  double rho = 0.0;
  double min_separation = 0.0;  // must be >= rho/2
  double covering_radius = 0.0;  // must be <= rho/2
  int max_multiplicity = 0;     // points within rho of a probe, maximised over probes
  bool separated() const { return min_separation >= 0.5 * rho; }
  bool covered() const { return covering_radius <= 0.5 * rho; }
  bool certified() const { return separated() && covered(); }
};

struct SphereLattice {
  std::vector<Vec3> points;
  LatticeCertificate certificate;
};

// S^2 x S^2 with the max metric max(d(x, x'), d(y, y')). Node nu = i * second.size() + j
// is (first[i], second[j]).
struct ProductLattice {
  SphereLattice first;
  SphereLattice second;
  LatticeCertificate certificate;
  double euclidean_covering = 0.0;  // sqrt(c1^2 + c2^2), reported only
  std::size_t size() const { return first.points.size() * second.points.size(); }
  Vec3 x(std::size_t nu) const { return first.points[nu / second.points.size()]; }
  Vec3 y(std::size_t nu) const { return second.points[nu % second.points.size()]; }
};

struct LatticeOptions {
  double seed_density = 16.0;  // Fibonacci seed of ceil(seed_density / rho^2) points
  int max_insertions = 100000;
};

// Separation and covering exactly (covering from the spherical Delaunay hull),
// multiplicity from the points themselves plus a Fibonacci probe set.
LatticeCertificate certify_s2(const std::vector<Vec3>& points, double rho);
// Throws DomainError unless 0 < rho < pi/2, CertificationError when the budget runs out.
SphereLattice build_lattice_s2(double rho, const LatticeOptions& options = {});
ProductLattice make_product(const SphereLattice& a, const SphereLattice& b, double rho);
ProductLattice product_lattice(double rho, const LatticeOptions& options = {});

struct RecheckReport {
  double min_separation = 0.0;
  double probe_covering = 0.0;  // lower bound for the true covering radius
  bool agrees = false;
};

// Independent check with random probes: separation recomputed by brute force, and the
// probe covering may not exceed the certified radius.
RecheckReport recheck_s2(const SphereLattice& lattice, std::uint64_t seed, int probes = 20000);
RecheckReport recheck_product(const ProductLattice& lattice, std::uint64_t seed, int probes = 200);

struct SphereCubature {
  std::vector<double> weights;
  int degree = 0;
  double residual = 0.0;  // max |sum w Y^m_k - int Y^m_k| over k <= degree
};

struct ProductCubature {
  ProductLattice lattice;
  std::vector<double> first_weights;
  std::vector<double> second_weights;
  int degree = 0;         // per sphere
  double residual = 0.0;  // max over Y^a_p (x) conj(Y^b_q)(y), p, q <= degree
  std::size_t size() const { return lattice.size(); }
  double weight(std::size_t nu) const {
    return first_weights[nu / second_weights.size()] * second_weights[nu % second_weights.size()];
  }
  double min_weight() const;
  double max_weight() const;
  double median_weight() const;
};

inline constexpr double kCubatureTolerance = 1e-9;

// Weights closest to uniform subject to exactness up to degree D and w >= floor_fraction * mean.
// Throws InfeasibleCubatureError when the residual stays above kCubatureTolerance.
SphereCubature sphere_cubature(const std::vector<Vec3>& points, int D, double floor_fraction = 0.1);
ProductCubature cubature_weights(const ProductLattice& lattice, int D, double floor_fraction = 0.1);

// Per-sphere degree making (Rf) Y^i_k conj(Y^j_k) integrable exactly: 2K.
int required_product_degree(int K);

// rho = C (omega + 1)^{-1/2}; omega inverted back to the largest K with K(K+1) <= omega.
double rho_for_bandwidth(int K, double C = 0.7);
struct DegreePolicy {
  double omega;
  int K;
  int D;
};
DegreePolicy degree_policy(double rho, double C = 0.7);

// Largest C in [lo, hi] (to the given number of halvings) for which the product
// cubature at degree 2K is feasible.
double tune_lattice_constant(int K, double lo = 0.3, double hi = 1.5, int steps = 6);

// Rf at every node, spectrally (circle_nodes == 0) or by the circle integral.
std::vector<Complex> sample_radon(const SO3Spectrum& f, const ProductLattice& lattice, int circle_nodes = 0);

// c(k)_ij = sum_nu mu_nu Rf(x_nu, y_nu) conj(Y^i_k(x_nu)) Y^j_k(y_nu).
PairSpectrum discrete_coefficients(const std::vector<Complex>& samples, const ProductCubature& cub, int K);
PairSpectrum discrete_coefficients(const std::vector<Vec3>& x, const std::vector<Vec3>& y,
                                   const std::vector<double>& weights, const std::vector<Complex>& samples, int K);
SO3Spectrum discrete_invert(const std::vector<Complex>& samples, const ProductCubature& cub, int K);

// Sample perturbation of size delta moves every coefficient by at most gain * delta.
double discrete_noise_gain(int K);

struct DimensionReport {
  int K = 0;
  double omega = 0.0;
  std::size_t samples = 0;
  long long per_sphere_dimension = 0;  // dim of per-sphere degree <= 2K
  long long laplacian_dimension = 0;   // dim E_{24 omega}(S^2 x S^2)
};
DimensionReport dimension_report(const ProductCubature& cub, int K);

}  // namespace so3radon
