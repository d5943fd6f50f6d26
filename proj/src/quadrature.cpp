#include "so3radon/quadrature.hpp"

#include <cmath>

#include "so3radon/parallel.hpp"

namespace so3radon {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussLegendre r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pm = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int l = 2; l <= n; ++l) {
      const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = -x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

SphereQuadrature sphere_quadrature(int K) {
  if (K < 0) throw DomainError("negative bandwidth");
  const int nt = K / 2 + 1;
  const int np = K + 1;
  const GaussLegendre gl = gauss_legendre(nt);
  SphereQuadrature q;
  q.exact_degree = K;
  for (int a = 0; a < nt; ++a) {
    const double ct = gl.nodes[static_cast<std::size_t>(a)];
    const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
    for (int b = 0; b < np; ++b) {
      const double phi = kTwoPi * b / np;
      q.nodes.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
      q.weights.push_back(gl.weights[static_cast<std::size_t>(a)] * kTwoPi / np);
    }
  }
  return q;
}

HaarQuadrature haar_quadrature(int K) {
  if (K < 0) throw DomainError("negative bandwidth");
  const int nu = 2 * K + 1;
  const int nb = K + 1;
  const GaussLegendre gl = gauss_legendre(nb);
  HaarQuadrature q;
  q.exact_degree = K;
  for (int b = 0; b < nb; ++b) {
    const double beta = std::acos(gl.nodes[static_cast<std::size_t>(b)]);
    const double w = 0.5 * gl.weights[static_cast<std::size_t>(b)] / (static_cast<double>(nu) * nu);
    for (int a = 0; a < nu; ++a)
      for (int c = 0; c < nu; ++c) {
        q.nodes.push_back({kTwoPi * a / nu, beta, kTwoPi * c / nu});
        q.weights.push_back(w);
      }
  }
  return q;
}

SO3Spectrum analyze_so3(const std::vector<Complex>& samples, const HaarQuadrature& rule, int K) {
  if (K < 0) throw DomainError("negative bandwidth");
  if (rule.exact_degree < K)
    throw BandwidthError("Haar rule exact to degree " + std::to_string(rule.exact_degree) +
                         " cannot analyze bandwidth " + std::to_string(K));
  if (samples.size() != rule.nodes.size()) throw BandwidthError("sample count does not match rule");
  constexpr std::size_t kChunk = 256;
  std::vector<SO3Spectrum> partial(chunk_count(samples.size(), kChunk), SO3Spectrum(K));
  parallel_chunks(samples.size(), kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
    SO3Spectrum& acc = partial[c];
    for (std::size_t n = begin; n < end; ++n) {
      const auto T = wigner_matrices(K, rule.nodes[n]);
      const Complex s = rule.weights[n] * samples[n];
      for (int k = 0; k <= K; ++k) acc[k] += s * T[static_cast<std::size_t>(k)].conjugate();
    }
  });
  SO3Spectrum out(K);
  for (const auto& p : partial)
    for (int k = 0; k <= K; ++k) out[k] += p[k];
  for (int k = 0; k <= K; ++k) out[k] *= (2.0 * k + 1.0);
  return out;
}

SO3Spectrum analyze_so3(const std::function<Complex(const EulerAngles&)>& f, const HaarQuadrature& rule,
                        int K) {
  std::vector<Complex> samples(rule.nodes.size());
  parallel_chunks(samples.size(), 256, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) samples[n] = f(rule.nodes[n]);
  });
  return analyze_so3(samples, rule, K);
}

std::vector<Complex> synth_on_rule(const SO3Spectrum& f, const HaarQuadrature& rule) {
  std::vector<Complex> out(rule.nodes.size());
  parallel_chunks(out.size(), 256, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) out[n] = synth_so3(f, rule.nodes[n]);
  });
  return out;
}

PairSpectrum analyze_pair(const std::function<Complex(const Vec3&, const Vec3&)>& g, int K,
                          const SphereQuadrature& rule_x, const SphereQuadrature& rule_y) {
  std::vector<std::vector<Complex>> yy;
  for (const auto& y : rule_y.nodes) yy.push_back(sph_harm_table(K, y));
  const std::size_t nx = rule_x.nodes.size();
  std::vector<PairSpectrum> partial(nx, PairSpectrum(K));
  parallel_chunks(nx, 1, [&](std::size_t, std::size_t a, std::size_t) {
    const auto yx = sph_harm_table(K, rule_x.nodes[a]);
    PairSpectrum& acc = partial[a];
    for (std::size_t b = 0; b < rule_y.nodes.size(); ++b) {
      const Complex v = rule_x.weights[a] * rule_y.weights[b] * g(rule_x.nodes[a], rule_y.nodes[b]);
      for (int k = 0; k <= K; ++k) {
        const int n = 2 * k + 1;
        const std::size_t base = static_cast<std::size_t>(k * k);
        for (int i = 0; i < n; ++i) {
          const Complex vi = v * std::conj(yx[base + static_cast<std::size_t>(i)]);
          for (int j = 0; j < n; ++j) acc[k](i, j) += vi * yy[b][base + static_cast<std::size_t>(j)];
        }
      }
    }
  });
  PairSpectrum out(K);
  for (const auto& p : partial)
    for (int k = 0; k <= K; ++k) out[k] += p[k];
  return out;
}

}  // namespace so3radon
