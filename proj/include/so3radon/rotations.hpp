#pragma once

#include <array>

#include "so3radon/core.hpp"

namespace so3radon {

// g = Z(gamma) X(beta) Z(alpha).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Angles of g = Rz(a) Ry(b) Rz(c); used internally by the Wigner code.
struct ZyzAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

Mat3 rot_x(double angle);
Mat3 rot_y(double angle);
Mat3 rot_z(double angle);

class RotationMatrix {
 public:
  RotationMatrix() : m_(Mat3::Identity()) {}
  // Throws DomainError unless U^T U = I and det U = 1 within 1e-10.
  explicit RotationMatrix(const Mat3& m);

  static RotationMatrix identity() { return RotationMatrix(); }
  const Mat3& matrix() const { return m_; }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  RotationMatrix operator*(const RotationMatrix& o) const;
  RotationMatrix inverse() const;

 private:
  struct Unchecked {};
  RotationMatrix(const Mat3& m, Unchecked) : m_(m) {}
  Mat3 m_;
  friend RotationMatrix rotation_unchecked(const Mat3& m);
};

RotationMatrix rotation_unchecked(const Mat3& m);

struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  static Quaternion pure(const Vec3& v) { return {0.0, v.x(), v.y(), v.z()}; }
  Vec3 vec() const { return {a1, a2, a3}; }
  Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
  double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3); }
  double dot(const Quaternion& o) const { return a0 * o.a0 + a1 * o.a1 + a2 * o.a2 + a3 * o.a3; }
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator*(double s) const { return {a0 * s, a1 * s, a2 * s, a3 * s}; }
  Quaternion operator+(const Quaternion& o) const {
    return {a0 + o.a0, a1 + o.a1, a2 + o.a2, a3 + o.a3};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {a0 - o.a0, a1 - o.a1, a2 - o.a2, a3 - o.a3};
  }
  Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }
  std::array<double, 4> array() const { return {a0, a1, a2, a3}; }
};

enum class Strictness { kNormalize, kReject };

class UnitQuaternion {
 public:
  UnitQuaternion() = default;
  // kNormalize rescales any nonzero input; kReject throws unless |q| = 1 within 1e-12.
  explicit UnitQuaternion(const Quaternion& q, Strictness s = Strictness::kNormalize);
  UnitQuaternion(double a0, double a1, double a2, double a3,
                 Strictness s = Strictness::kNormalize)
      : UnitQuaternion(Quaternion{a0, a1, a2, a3}, s) {}

  const Quaternion& q() const { return q_; }
  double a0() const { return q_.a0; }
  double a1() const { return q_.a1; }
  double a2() const { return q_.a2; }
  double a3() const { return q_.a3; }
  std::array<double, 4> array() const { return q_.array(); }

  UnitQuaternion operator*(const UnitQuaternion& o) const { return UnitQuaternion(q_ * o.q_); }
  UnitQuaternion operator-() const { return UnitQuaternion(-q_, Strictness::kReject); }
  UnitQuaternion conj() const { return UnitQuaternion(q_.conj(), Strictness::kReject); }
  // a0 >= 0; when a0 == 0 the first nonzero component is positive.
  UnitQuaternion canonical() const;
  Vec3 rotate(const Vec3& v) const;

 private:
  Quaternion q_{1.0, 0.0, 0.0, 0.0};
};

RotationMatrix tau(const UnitQuaternion& q);
RotationMatrix tau(const Quaternion& q, Strictness s);
UnitQuaternion quat_from_matrix(const RotationMatrix& r);

Mat3 euler_matrix(const EulerAngles& e);
RotationMatrix to_matrix(const EulerAngles& e);
EulerAngles euler_from_matrix(const RotationMatrix& r);
EulerAngles euler_from_quat(const UnitQuaternion& q);
UnitQuaternion quat_from_euler(const EulerAngles& e);

ZyzAngles zyz_from_matrix(const Mat3& r);
ZyzAngles zyz_from_euler(const EulerAngles& e);

// The circle C_{x,y} = {g : g y = x} and its preimage plane span(q1, q2) in S^3.
struct GreatCirclePair {
  Vec3 x;
  Vec3 y;
  UnitQuaternion q1;
  UnitQuaternion q2;
  double eta = 0.0;
};

GreatCirclePair circle_from_pair(const Vec3& x, const Vec3& y);
UnitQuaternion circle_point(const GreatCirclePair& c, double t);

}  // namespace so3radon
