#pragma once

#include <array>
#include <vector>

#include "so3radon/core.hpp"

namespace so3radon {

// Incremental convex hull of unit vectors. Its facets are the spherical Delaunay
// triangles, so the deepest hole of the point set sits at a facet normal.
class SphereHull {
 public:
  struct Facet {
    std::array<int, 3> v;
    Vec3 normal;    // outward, unit
    double offset;  // normal . vertex; the hole radius is acos(offset)
  };

  // Throws DomainError when fewer than four points span a solid.
  explicit SphereHull(std::vector<Vec3> points);

  // Returns false when p lies on or inside the current hull (co-circular points).
  bool insert(const Vec3& p);

  const std::vector<Vec3>& points() const { return points_; }
  std::vector<Facet> facets() const;

  struct Hole {
    double radius;
    Vec3 center;
  };
  Hole deepest_hole() const;

 private:
  void add_facet(int a, int b, int c);
  bool insert_index(int i);

  std::vector<Vec3> points_;
  Vec3 interior_ = Vec3::Zero();
  std::vector<Facet> facets_;
  std::vector<char> alive_;
};

// Exact covering radius of a point set on S^2: the largest distance from any point of
// the sphere to its nearest member. Small or degenerate sets fall back to a dense probe.
SphereHull::Hole covering_radius_s2(const std::vector<Vec3>& points);

}  // namespace so3radon
