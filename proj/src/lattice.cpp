#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "so3radon/hull.hpp"
#include "so3radon/parallel.hpp"
#include "so3radon/random.hpp"
#include "so3radon/sampling.hpp"

namespace so3radon {

namespace {

std::vector<Vec3> fibonacci_sphere(std::size_t n) {
  std::vector<Vec3> out;
  out.reserve(n);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double t = golden * static_cast<double>(i);
    out.emplace_back(r * std::cos(t), r * std::sin(t), z);
  }
  return out;
}

double min_separation(const std::vector<Vec3>& p) {
  const std::size_t n = p.size();
  std::vector<double> partial(chunk_count(n, 64), std::numeric_limits<double>::infinity());
  parallel_chunks(n, 64, [&](std::size_t c, std::size_t b, std::size_t e) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, sphere_distance(p[i], p[j]));
    partial[c] = best;
  });
  double best = std::numeric_limits<double>::infinity();
  for (double v : partial) best = std::min(best, v);
  return best;
}

int multiplicity(const std::vector<Vec3>& p, double rho) {
  std::vector<Vec3> probes = fibonacci_sphere(4 * p.size() + 1000);
  probes.insert(probes.end(), p.begin(), p.end());
  const double c = std::cos(rho);
  std::vector<int> partial(chunk_count(probes.size(), 256), 0);
  parallel_chunks(probes.size(), 256, [&](std::size_t ci, std::size_t b, std::size_t e) {
    int best = 0;
    for (std::size_t i = b; i < e; ++i) {
      int count = 0;
      for (const Vec3& q : p)
        if (probes[i].dot(q) > c) ++count;
      best = std::max(best, count);
    }
    partial[ci] = best;
  });
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace

LatticeCertificate certify_s2(const std::vector<Vec3>& points, double rho) {
  if (points.empty()) throw DomainError("empty lattice");
  LatticeCertificate c;
  c.rho = rho;
  c.min_separation = points.size() > 1 ? min_separation(points) : kPi;
  c.covering_radius = covering_radius_s2(points).radius;
  c.max_multiplicity = multiplicity(points, rho);
  return c;
}

SphereLattice build_lattice_s2(double rho, const LatticeOptions& options) {
  if (!(rho > 0.0 && rho < 0.5 * kPi)) throw DomainError("lattice radius must lie in (0, pi/2)");
  const auto seed = fibonacci_sphere(static_cast<std::size_t>(std::ceil(options.seed_density / (rho * rho))));
  const double sep = std::cos(0.5 * rho);
  std::vector<Vec3> kept;
  for (const Vec3& p : seed) {
    bool ok = true;
    for (const Vec3& q : kept)
      if (p.dot(q) > sep) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(p);
  }
  SphereHull hull(kept);
  // each hole centre is an empty circumcentre, so inserting it keeps the separation
  for (int it = 0;; ++it) {
    const SphereHull::Hole h = hull.deepest_hole();
    if (h.radius <= 0.5 * rho) break;
    if (it >= options.max_insertions || !hull.insert(h.center))
      throw CertificationError("lattice construction did not reach the covering radius", 0.5 * rho, h.radius);
  }
  SphereLattice out;
  out.points = hull.points();
  out.certificate = certify_s2(out.points, rho);
  if (!out.certificate.certified())
    throw CertificationError("lattice failed certification", out.certificate.min_separation,
                             out.certificate.covering_radius);
  return out;
}

ProductLattice make_product(const SphereLattice& a, const SphereLattice& b, double rho) {
  ProductLattice out;
  out.first = a;
  out.second = b;
  LatticeCertificate& c = out.certificate;
  c.rho = rho;
  // distinct nodes differ in at least one factor; the other distance may be zero
  c.min_separation = std::min(a.certificate.min_separation, b.certificate.min_separation);
  c.covering_radius = std::max(a.certificate.covering_radius, b.certificate.covering_radius);
  c.max_multiplicity = a.certificate.max_multiplicity * b.certificate.max_multiplicity;
  out.euclidean_covering = std::hypot(a.certificate.covering_radius, b.certificate.covering_radius);
  return out;
}

ProductLattice product_lattice(double rho, const LatticeOptions& options) {
  const SphereLattice s = build_lattice_s2(rho, options);
  return make_product(s, s, rho);
}

RecheckReport recheck_s2(const SphereLattice& lattice, std::uint64_t seed, int probes) {
  Rng rng(seed);
  std::vector<Vec3> z(static_cast<std::size_t>(probes));
  for (auto& v : z) v = random_unit_vector(rng);
  double cover = 0.0;
  for (const Vec3& v : z) {
    double best = -1.0;
    for (const Vec3& p : lattice.points) best = std::max(best, v.dot(p));
    cover = std::max(cover, std::acos(std::min(1.0, best)));
  }
  RecheckReport r;
  r.min_separation = lattice.points.size() > 1 ? min_separation(lattice.points) : kPi;
  r.probe_covering = cover;
  r.agrees = std::abs(r.min_separation - lattice.certificate.min_separation) <= 1e-9 &&
             r.probe_covering <= lattice.certificate.covering_radius + 1e-9;
  return r;
}

RecheckReport recheck_product(const ProductLattice& lattice, std::uint64_t seed, int probes) {
  Rng rng(seed);
  const std::size_t n = lattice.size();
  double cover = 0.0;
  for (int i = 0; i < probes; ++i) {
    const Vec3 zx = random_unit_vector(rng), zy = random_unit_vector(rng);
    std::vector<double> partial(chunk_count(n, 4096), kPi);
    parallel_chunks(n, 4096, [&](std::size_t c, std::size_t b, std::size_t e) {
      double best = kPi;
      for (std::size_t nu = b; nu < e; ++nu)
        best = std::min(best, std::max(sphere_distance(zx, lattice.x(nu)), sphere_distance(zy, lattice.y(nu))));
      partial[c] = best;
    });
    cover = std::max(cover, *std::min_element(partial.begin(), partial.end()));
  }
  RecheckReport r;
  const auto sep = [](const std::vector<Vec3>& p) { return p.size() > 1 ? min_separation(p) : kPi; };
  r.min_separation = std::min(sep(lattice.first.points), sep(lattice.second.points));
  r.probe_covering = cover;
  r.agrees = std::abs(r.min_separation - lattice.certificate.min_separation) <= 1e-9 &&
             r.probe_covering <= lattice.certificate.covering_radius + 1e-9;
  return r;
}

}  // namespace so3radon
