#pragma once

#include <vector>

#include "so3radon/core.hpp"
#include "so3radon/rotations.hpp"

namespace so3radon {

// Order index i in [1, 2k+1] with i = m + k + 1.
struct SphereDegreeIndex {
  int k = 0;
  int i = 1;

  SphereDegreeIndex(int k_, int i_);
  static SphereDegreeIndex from_order(int k, int m) { return {k, m + k + 1}; }
  int m() const { return i - k - 1; }
  int dimension() const { return 2 * k + 1; }
};

inline int order_index(int k, int m) { return m + k + 1; }

// Associated Legendre function with Condon-Shortley phase.
double assoc_legendre(int k, int m, double t);
double legendre(int k, double t);

// Orthonormal complex spherical harmonic; Y_k^{-m} = (-1)^m conj(Y_k^m).
Complex sph_harm(int k, int m, double theta, double phi);
Complex sph_harm(int k, int m, const Vec3& x);

// All Y_k^m(x) for k <= K, stored at k*k + k + m.
std::vector<Complex> sph_harm_table(int K, const Vec3& x);
inline std::size_t harm_slot(int k, int m) { return static_cast<std::size_t>(k * k + k + m); }

// d^l_{m'm}(beta) for l <= L; block l is indexed (m' + l, m + l).
std::vector<Eigen::MatrixXd> wigner_d_all(int L, double beta);
Eigen::MatrixXd wigner_d(int l, double beta);

// T^k(g) with Y^i(g x) = sum_j T^k_{ij}(g) Y^j(x) and T^k(gh) = T^k(g) T^k(h).
CMatrix wigner_matrix(int k, const EulerAngles& g);
std::vector<CMatrix> wigner_matrices(int K, const EulerAngles& g);
std::vector<CMatrix> wigner_matrices(int K, const RotationMatrix& g);
std::vector<CMatrix> wigner_matrices_zyz(int K, const ZyzAngles& z);

// One (2k+1)x(2k+1) complex block per degree k = 0..K.
struct BlockSpectrum {
  std::vector<CMatrix> blocks;

  BlockSpectrum() = default;
  explicit BlockSpectrum(int K);
  int bandwidth() const { return static_cast<int>(blocks.size()) - 1; }
  CMatrix& operator[](int k) { return blocks.at(static_cast<std::size_t>(k)); }
  const CMatrix& operator[](int k) const { return blocks.at(static_cast<std::size_t>(k)); }
  void validate() const;
};

// f = sum_k sum_ij f(k)_ij T^k_ij, so f(k)_ij = (2k+1) <f, T^k_ij>.
struct SO3Spectrum : BlockSpectrum {
  using BlockSpectrum::BlockSpectrum;
};

// G(x,y) = sum_k sum_ij G(k)_ij Y^i_k(x) conj(Y^j_k(y)).
struct PairSpectrum : BlockSpectrum {
  using BlockSpectrum::BlockSpectrum;
};

double max_block_error(const BlockSpectrum& a, const BlockSpectrum& b);
double max_abs_coefficient(const BlockSpectrum& a);

// L2(SO(3)) norm squared under normalized Haar measure: sum_k |f(k)|_HS^2 / (2k+1).
double l2_norm_squared(const SO3Spectrum& f);
// L2(S^2 x S^2) norm squared: sum_k |G(k)|_HS^2.
double l2_norm_squared(const PairSpectrum& g);

// Fourier coefficients int f(g) pi*(g) dg in the representation-theoretic layout,
// for which |f|^2 = sum_k (2k+1) |fhat_PW(k)|_HS^2.
std::vector<CMatrix> peter_weyl_blocks(const SO3Spectrum& f);

SO3Spectrum laplacian(const SO3Spectrum& f);
// (f * r)(g) = int f(h) r(h^{-1} g) dh.
SO3Spectrum convolve(const SO3Spectrum& f, const SO3Spectrum& r);
// (L_h f)(g) = f(h^{-1} g).
SO3Spectrum left_translate(const SO3Spectrum& f, const RotationMatrix& h);
bool is_real_valued(const SO3Spectrum& f, double tol);

Complex synth_so3(const SO3Spectrum& f, const RotationMatrix& g);
Complex synth_so3(const SO3Spectrum& f, const EulerAngles& g);
Complex synth_so3_zyz(const SO3Spectrum& f, const ZyzAngles& g);

Complex eval_pair(const PairSpectrum& G, const Vec3& x, const Vec3& y);

}  // namespace so3radon
