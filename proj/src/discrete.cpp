#include <cmath>

#include "so3radon/parallel.hpp"
#include "so3radon/radon.hpp"
#include "so3radon/sampling.hpp"

namespace so3radon {

namespace {

std::vector<std::vector<Complex>> tables(const std::vector<Vec3>& points, int K) {
  std::vector<std::vector<Complex>> out(points.size());
  parallel_chunks(points.size(), 64, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = sph_harm_table(K, points[i]);
  });
  return out;
}

// Ordered reduction of chunked partial spectra.
template <class Term>
PairSpectrum accumulate(std::size_t n, int K, const Term& term) {
  const std::size_t chunk = 2048;
  std::vector<PairSpectrum> partial(chunk_count(n, chunk), PairSpectrum(K));
  parallel_chunks(n, chunk, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t nu = b; nu < e; ++nu) term(nu, partial[c]);
  });
  PairSpectrum G(K);
  for (const auto& p : partial)
    for (int k = 0; k <= K; ++k) G[k] += p[k];
  return G;
}

void add_term(PairSpectrum& G, int K, Complex v, const std::vector<Complex>& yx, const std::vector<Complex>& yy) {
  for (int k = 0; k <= K; ++k)
    for (int i = -k; i <= k; ++i) {
      const Complex a = v * std::conj(yx[harm_slot(k, i)]);
      for (int j = -k; j <= k; ++j) G[k](i + k, j + k) += a * yy[harm_slot(k, j)];
    }
}

}  // namespace

std::vector<Complex> sample_radon(const SO3Spectrum& f, const ProductLattice& lattice, int circle_nodes) {
  const std::size_t n = lattice.size();
  std::vector<Complex> out(n);
  if (circle_nodes > 0) {
    parallel_chunks(n, 512, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t nu = b; nu < e; ++nu) out[nu] = radon_forward_numeric(f, lattice.x(nu), lattice.y(nu), circle_nodes);
    });
    return out;
  }
  const PairSpectrum G = radon_forward_spectral(f);
  const int K = f.bandwidth();
  const auto tx = tables(lattice.first.points, K), ty = tables(lattice.second.points, K);
  const std::size_t m = lattice.second.points.size();
  parallel_chunks(n, 512, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t nu = b; nu < e; ++nu) {
      const auto& yx = tx[nu / m];
      const auto& yy = ty[nu % m];
      Complex s = 0.0;
      for (int k = 0; k <= K; ++k)
        for (int i = -k; i <= k; ++i) {
          Complex row = 0.0;
          for (int j = -k; j <= k; ++j) row += G[k](i + k, j + k) * std::conj(yy[harm_slot(k, j)]);
          s += yx[harm_slot(k, i)] * row;
        }
      out[nu] = s;
    }
  });
  return out;
}

PairSpectrum discrete_coefficients(const std::vector<Complex>& samples, const ProductCubature& cub, int K) {
  if (K < 0) throw DomainError("bandwidth must be nonnegative");
  if (cub.degree < required_product_degree(K))
    throw BandwidthError("cubature degree " + std::to_string(cub.degree) + " is below 2K = " +
                         std::to_string(required_product_degree(K)));
  if (samples.size() != cub.size()) throw DomainError("sample count does not match the lattice");
  const auto tx = tables(cub.lattice.first.points, K), ty = tables(cub.lattice.second.points, K);
  const std::size_t m = cub.lattice.second.points.size();
  return accumulate(samples.size(), K, [&](std::size_t nu, PairSpectrum& G) {
    add_term(G, K, cub.weight(nu) * samples[nu], tx[nu / m], ty[nu % m]);
  });
}

PairSpectrum discrete_coefficients(const std::vector<Vec3>& x, const std::vector<Vec3>& y,
                                   const std::vector<double>& weights, const std::vector<Complex>& samples, int K) {
  if (K < 0) throw DomainError("bandwidth must be nonnegative");
  if (x.size() != y.size() || x.size() != weights.size() || x.size() != samples.size())
    throw DomainError("sample, node and weight counts differ");
  return accumulate(samples.size(), K, [&](std::size_t nu, PairSpectrum& G) {
    add_term(G, K, weights[nu] * samples[nu], sph_harm_table(K, x[nu]), sph_harm_table(K, y[nu]));
  });
}

SO3Spectrum discrete_invert(const std::vector<Complex>& samples, const ProductCubature& cub, int K) {
  return radon_invert(discrete_coefficients(samples, cub, K));
}

double discrete_noise_gain(int K) {
  // |c(k)_ij| <= delta sum mu |Y^i_k| |Y^j_k| <= delta 16 pi^2 (2k+1)/(4 pi), then times (2k+1)/(4 pi)
  return static_cast<double>((2 * K + 1) * (2 * K + 1));
}

DimensionReport dimension_report(const ProductCubature& cub, int K) {
  DimensionReport r;
  r.K = K;
  r.omega = static_cast<double>(K) * (K + 1);
  r.samples = cub.size();
  const long long d = 2LL * K + 1;
  r.per_sphere_dimension = d * d * d * d;
  const double cut = 24.0 * r.omega;
  for (long long p = 0; p * (p + 1) <= cut; ++p)
    for (long long q = 0; p * (p + 1) + q * (q + 1) <= cut; ++q) r.laplacian_dimension += (2 * p + 1) * (2 * q + 1);
  return r;
}

}  // namespace so3radon
