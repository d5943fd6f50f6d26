#include "so3radon/hull.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace so3radon {

namespace {

constexpr double kVisible = 1e-12;

std::vector<Vec3> fibonacci_probe(int n) {
  std::vector<Vec3> out;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
  }
  return out;
}

}  // namespace

SphereHull::SphereHull(std::vector<Vec3> points) : points_(std::move(points)) {
  const int n = static_cast<int>(points_.size());
  if (n < 4) throw DomainError("hull needs at least four points");
  int i1 = 0;
  for (int i = 1; i < n; ++i)
    if ((points_[static_cast<std::size_t>(i)] - points_[0]).norm() > (points_[static_cast<std::size_t>(i1)] - points_[0]).norm()) i1 = i;
  const Vec3 a = points_[0], b = points_[static_cast<std::size_t>(i1)];
  int i2 = -1;
  double best = 1e-10;
  for (int i = 0; i < n; ++i) {
    const double d = (points_[static_cast<std::size_t>(i)] - a).cross(b - a).norm();
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0) throw DomainError("hull points are collinear");
  const Vec3 c = points_[static_cast<std::size_t>(i2)];
  int i3 = -1;
  best = 1e-10;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs((b - a).cross(c - a).dot(points_[static_cast<std::size_t>(i)] - a));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0) throw DomainError("hull points are coplanar");
  interior_ = (a + b + c + points_[static_cast<std::size_t>(i3)]) / 4.0;
  add_facet(0, i1, i2);
  add_facet(0, i1, i3);
  add_facet(0, i2, i3);
  add_facet(i1, i2, i3);
  for (int i = 0; i < n; ++i)
    if (i != 0 && i != i1 && i != i2 && i != i3) insert_index(i);
}

void SphereHull::add_facet(int a, int b, int c) {
  const Vec3& pa = points_[static_cast<std::size_t>(a)];
  Vec3 nrm = (points_[static_cast<std::size_t>(b)] - pa).cross(points_[static_cast<std::size_t>(c)] - pa);
  Facet f{{a, b, c}, Vec3::Zero(), 0.0};
  if (nrm.dot(interior_ - pa) > 0.0) {
    nrm = -nrm;
    std::swap(f.v[1], f.v[2]);
  }
  f.normal = nrm.normalized();
  f.offset = f.normal.dot(pa);
  facets_.push_back(f);
  alive_.push_back(1);
}

bool SphereHull::insert_index(int i) {
  const Vec3& p = points_[static_cast<std::size_t>(i)];
  std::vector<std::size_t> visible;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (alive_[f] && facets_[f].normal.dot(p) - facets_[f].offset > kVisible) visible.push_back(f);
  if (visible.empty()) return false;
  const auto key = [](int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); };
  std::unordered_set<long long> edges;
  for (std::size_t f : visible)
    for (int e = 0; e < 3; ++e) edges.insert(key(facets_[f].v[static_cast<std::size_t>(e)], facets_[f].v[static_cast<std::size_t>((e + 1) % 3)]));
  std::vector<std::pair<int, int>> horizon;
  for (std::size_t f : visible) {
    for (int e = 0; e < 3; ++e) {
      const int a = facets_[f].v[static_cast<std::size_t>(e)], b = facets_[f].v[static_cast<std::size_t>((e + 1) % 3)];
      if (!edges.count(key(b, a))) horizon.emplace_back(a, b);
    }
    alive_[f] = 0;
  }
  for (const auto& [a, b] : horizon) add_facet(a, b, i);
  return true;
}

bool SphereHull::insert(const Vec3& p) {
  points_.push_back(p);
  if (insert_index(static_cast<int>(points_.size()) - 1)) return true;
  points_.pop_back();
  return false;
}

std::vector<SphereHull::Facet> SphereHull::facets() const {
  std::vector<Facet> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (alive_[f]) out.push_back(facets_[f]);
  return out;
}

SphereHull::Hole SphereHull::deepest_hole() const {
  Hole h{-1.0, Vec3::UnitZ()};
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (!alive_[f]) continue;
    const double r = std::acos(std::clamp(facets_[f].offset, -1.0, 1.0));
    if (r > h.radius) h = {r, facets_[f].normal};
  }
  return h;
}

SphereHull::Hole covering_radius_s2(const std::vector<Vec3>& points) {
  if (points.empty()) throw DomainError("covering radius of an empty set");
  try {
    return SphereHull(points).deepest_hole();
  } catch (const DomainError&) {
  }
  std::vector<Vec3> probes = fibonacci_probe(20000);
  for (const Vec3& p : points) probes.push_back(-p);
  SphereHull::Hole h{-1.0, Vec3::UnitZ()};
  for (const Vec3& z : probes) {
    double nearest = kPi;
    for (const Vec3& p : points) nearest = std::min(nearest, sphere_distance(z, p));
    if (nearest > h.radius) h = {nearest, z};
  }
  return h;
}

}  // namespace so3radon
