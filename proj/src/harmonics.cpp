#include "so3radon/harmonics.hpp"

#include <cmath>

namespace so3radon {

namespace {

// Normalized associated Legendre values Pbar_l^m(t) for l = m..L, fixed m >= 0;
// Y_l^m = Pbar_l^m(cos theta) e^{i m phi}. s = sin(theta) is passed separately.
void normalized_legendre_column(int L, int m, double t, double s, double* out) {
  double pmm = 1.0 / std::sqrt(kFourPi);
  for (int j = 1; j <= m; ++j) pmm *= -std::sqrt((2.0 * j + 1.0) / (2.0 * j)) * s;
  out[0] = pmm;
  if (L == m) return;
  out[1] = std::sqrt(2.0 * m + 3.0) * t * pmm;
  for (int l = m + 2; l <= L; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    const double lp = l - 1;
    const double b = std::sqrt((4.0 * lp * lp - 1.0) / (lp * lp - static_cast<double>(m) * m));
    out[l - m] = a * (t * out[l - m - 1] - out[l - m - 2] / b);
  }
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("colatitude outside [0, pi]");
}

long double log_factorial(int n) {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(1024);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::lgamma(static_cast<long double>(i) + 1.0L);
    return t;
  }();
  if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<long double>(n) + 1.0L);
}

// Wigner's sum for d^j_{m'm}(beta); used only where it has a single term.
double wigner_d_direct(int j, int mp, int m, double beta) {
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  const int s_lo = std::max(0, m - mp);
  const int s_hi = std::min(j + m, j - mp);
  const long double lnum =
      0.5L * (log_factorial(j + mp) + log_factorial(j - mp) + log_factorial(j + m) + log_factorial(j - m));
  double sum = 0.0;
  for (int k = s_lo; k <= s_hi; ++k) {
    const long double lden = log_factorial(j + m - k) + log_factorial(k) + log_factorial(mp - m + k) +
                             log_factorial(j - mp - k);
    const double coeff = static_cast<double>(std::exp(lnum - lden));
    const double sign = ((mp - m + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * coeff * std::pow(c, 2 * j + m - mp - 2 * k) * std::pow(s, mp - m + 2 * k);
  }
  return sum;
}

}  // namespace

SphereDegreeIndex::SphereDegreeIndex(int k_, int i_) : k(k_), i(i_) {
  if (k < 0 || i < 1 || i > 2 * k + 1) throw DomainError("order index outside [1, 2k+1]");
}

double assoc_legendre(int k, int m, double t) {
  if (!(std::abs(t) <= 1.0)) throw DomainError("assoc_legendre: |t| > 1");
  if (k < 0 || m < 0 || m > k) throw DomainError("assoc_legendre: need 0 <= m <= k");
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  double odd = 1.0;
  for (int j = 1; j <= m; ++j) {
    pmm *= -odd * s;
    odd += 2.0;
  }
  if (k == m) return pmm;
  double p1 = t * (2.0 * m + 1.0) * pmm;
  if (k == m + 1) return p1;
  double p0 = pmm;
  for (int l = m + 2; l <= k; ++l) {
    const double p2 = (t * (2.0 * l - 1.0) * p1 - (l + m - 1.0) * p0) / (l - m);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre(int k, double t) { return assoc_legendre(k, 0, t); }

Complex sph_harm(int k, int m, double theta, double phi) {
  check_theta(theta);
  if (k < 0 || std::abs(m) > k) throw DomainError("sph_harm: need |m| <= k");
  const int am = std::abs(m);
  std::vector<double> col(static_cast<std::size_t>(k - am + 1));
  normalized_legendre_column(k, am, std::cos(theta), std::sin(theta), col.data());
  const Complex y = col.back() * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

Complex sph_harm(int k, int m, const Vec3& x) {
  const SphericalCoords c = to_spherical(x);
  return sph_harm(k, m, c.theta, c.phi);
}

std::vector<Complex> sph_harm_table(int K, const Vec3& x) {
  if (K < 0) throw DomainError("negative bandwidth");
  std::vector<Complex> out(static_cast<std::size_t>((K + 1) * (K + 1)));
  const double n = x.norm();
  const double t = x.z() / n;
  const double s = std::hypot(x.x(), x.y()) / n;
  const double phi = std::atan2(x.y(), x.x());
  std::vector<double> col(static_cast<std::size_t>(K + 1));
  for (int m = 0; m <= K; ++m) {
    normalized_legendre_column(K, m, t, s, col.data());
    const Complex e = std::polar(1.0, m * phi);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (int l = m; l <= K; ++l) {
      const Complex y = col[static_cast<std::size_t>(l - m)] * e;
      out[harm_slot(l, m)] = y;
      if (m > 0) out[harm_slot(l, -m)] = sign * std::conj(y);
    }
  }
  return out;
}

std::vector<Eigen::MatrixXd> wigner_d_all(int L, double beta) {
  if (L < 0) throw DomainError("negative bandwidth");
  std::vector<Eigen::MatrixXd> d(static_cast<std::size_t>(L + 1));
  for (int l = 0; l <= L; ++l) d[static_cast<std::size_t>(l)] = Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1);
  const double cb = std::cos(beta);
  for (int mp = -L; mp <= L; ++mp) {
    for (int m = -L; m <= L; ++m) {
      const int l0 = std::max(std::abs(mp), std::abs(m));
      double prev = 0.0;
      double cur = wigner_d_direct(l0, mp, m, beta);
      d[static_cast<std::size_t>(l0)](mp + l0, m + l0) = cur;
      const double M = mp, N = m;
      for (int J = l0; J < L; ++J) {
        double next;
        if (J == 0) {
          next = cb * cur;
        } else {
          const double j = J, j1 = J + 1;
          const double a = j1 * (2.0 * j + 1.0) / std::sqrt((j1 * j1 - M * M) * (j1 * j1 - N * N));
          const double b = cb - M * N / (j * j1);
          const double c = std::sqrt((j * j - M * M) * (j * j - N * N)) / (j * (2.0 * j + 1.0));
          next = a * (b * cur - c * prev);
        }
        prev = cur;
        cur = next;
        d[static_cast<std::size_t>(J + 1)](mp + J + 1, m + J + 1) = cur;
      }
    }
  }
  return d;
}

Eigen::MatrixXd wigner_d(int l, double beta) { return wigner_d_all(l, beta).back(); }

std::vector<CMatrix> wigner_matrices_zyz(int K, const ZyzAngles& z) {
  const auto d = wigner_d_all(K, z.b);
  std::vector<CMatrix> out(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) {
    const int n = 2 * k + 1;
    CVector ea(n), ec(n);
    for (int r = 0; r < n; ++r) {
      ea(r) = std::polar(1.0, (r - k) * z.a);
      ec(r) = std::polar(1.0, (r - k) * z.c);
    }
    out[static_cast<std::size_t>(k)] = ea.asDiagonal() * d[static_cast<std::size_t>(k)].cast<Complex>() * ec.asDiagonal();
  }
  return out;
}

std::vector<CMatrix> wigner_matrices(int K, const EulerAngles& g) {
  return wigner_matrices_zyz(K, zyz_from_euler(g));
}

std::vector<CMatrix> wigner_matrices(int K, const RotationMatrix& g) {
  return wigner_matrices_zyz(K, zyz_from_matrix(g.matrix()));
}

CMatrix wigner_matrix(int k, const EulerAngles& g) {
  if (!(g.beta >= 0.0 && g.beta <= kPi)) throw DomainError("Euler beta outside [0, pi]");
  return wigner_matrices(k, g).back();
}

BlockSpectrum::BlockSpectrum(int K) {
  if (K < 0) throw DomainError("negative bandwidth");
  blocks.resize(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) blocks[static_cast<std::size_t>(k)] = CMatrix::Zero(2 * k + 1, 2 * k + 1);
}

void BlockSpectrum::validate() const {
  if (blocks.empty()) throw DomainError("spectrum has no blocks");
  for (int k = 0; k <= bandwidth(); ++k) {
    const CMatrix& b = (*this)[k];
    if (b.rows() != 2 * k + 1 || b.cols() != 2 * k + 1)
      throw DomainError("block " + std::to_string(k) + " has the wrong shape");
  }
}

double max_block_error(const BlockSpectrum& a, const BlockSpectrum& b) {
  const int K = std::max(a.bandwidth(), b.bandwidth());
  double err = 0.0;
  for (int k = 0; k <= K; ++k) {
    const int n = 2 * k + 1;
    const CMatrix za = k <= a.bandwidth() ? a[k] : CMatrix::Zero(n, n);
    const CMatrix zb = k <= b.bandwidth() ? b[k] : CMatrix::Zero(n, n);
    err = std::max(err, (za - zb).cwiseAbs().maxCoeff());
  }
  return err;
}

double max_abs_coefficient(const BlockSpectrum& a) {
  double m = 0.0;
  for (const auto& b : a.blocks) m = std::max(m, b.cwiseAbs().maxCoeff());
  return m;
}

double l2_norm_squared(const SO3Spectrum& f) {
  double s = 0.0;
  for (int k = 0; k <= f.bandwidth(); ++k) s += f[k].squaredNorm() / (2.0 * k + 1.0);
  return s;
}

double l2_norm_squared(const PairSpectrum& g) {
  double s = 0.0;
  for (const auto& b : g.blocks) s += b.squaredNorm();
  return s;
}

std::vector<CMatrix> peter_weyl_blocks(const SO3Spectrum& f) {
  std::vector<CMatrix> out;
  for (int k = 0; k <= f.bandwidth(); ++k) out.push_back(f[k].transpose() / (2.0 * k + 1.0));
  return out;
}

SO3Spectrum laplacian(const SO3Spectrum& f) {
  SO3Spectrum out = f;
  for (int k = 0; k <= f.bandwidth(); ++k) out[k] *= -static_cast<double>(k) * (k + 1);
  return out;
}

SO3Spectrum convolve(const SO3Spectrum& f, const SO3Spectrum& r) {
  const int K = std::min(f.bandwidth(), r.bandwidth());
  SO3Spectrum out(K);
  for (int k = 0; k <= K; ++k) out[k] = f[k] * r[k] / (2.0 * k + 1.0);
  return out;
}

SO3Spectrum left_translate(const SO3Spectrum& f, const RotationMatrix& h) {
  const auto T = wigner_matrices(f.bandwidth(), h);
  SO3Spectrum out(f.bandwidth());
  for (int k = 0; k <= f.bandwidth(); ++k) out[k] = T[static_cast<std::size_t>(k)].conjugate() * f[k];
  return out;
}

bool is_real_valued(const SO3Spectrum& f, double tol) {
  for (int k = 0; k <= f.bandwidth(); ++k) {
    const int n = 2 * k + 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double sign = ((a - b) % 2 == 0) ? 1.0 : -1.0;
        if (std::abs(f[k](a, b) - sign * std::conj(f[k](n - 1 - a, n - 1 - b))) > tol) return false;
      }
  }
  return true;
}

Complex synth_so3_zyz(const SO3Spectrum& f, const ZyzAngles& z) {
  const auto T = wigner_matrices_zyz(f.bandwidth(), z);
  Complex s = 0.0;
  for (int k = 0; k <= f.bandwidth(); ++k) s += f[k].cwiseProduct(T[static_cast<std::size_t>(k)]).sum();
  return s;
}

Complex synth_so3(const SO3Spectrum& f, const RotationMatrix& g) {
  return synth_so3_zyz(f, zyz_from_matrix(g.matrix()));
}

Complex synth_so3(const SO3Spectrum& f, const EulerAngles& g) {
  return synth_so3_zyz(f, zyz_from_euler(g));
}

Complex eval_pair(const PairSpectrum& G, const Vec3& x, const Vec3& y) {
  const int K = G.bandwidth();
  const auto yx = sph_harm_table(K, x);
  const auto yy = sph_harm_table(K, y);
  Complex s = 0.0;
  for (int k = 0; k <= K; ++k) {
    const int n = 2 * k + 1;
    const std::size_t base = static_cast<std::size_t>(k * k);
    for (int i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (int j = 0; j < n; ++j) row += G[k](i, j) * std::conj(yy[base + static_cast<std::size_t>(j)]);
      s += row * yx[base + static_cast<std::size_t>(i)];
    }
  }
  return s;
}

}  // namespace so3radon
