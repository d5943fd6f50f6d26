#include "so3radon/rotations.hpp"

#include <cmath>

namespace so3radon {

namespace {

double wrap_2pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double wrap_pi(double a) { return std::remainder(a, kTwoPi); }

}  // namespace

Mat3 rot_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return m;
}

Mat3 rot_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 m;
  m << c, 0, s, 0, 1, 0, -s, 0, c;
  return m;
}

Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 m;
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return m;
}

RotationMatrix::RotationMatrix(const Mat3& m) : m_(m) {
  const double orth = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(orth <= 1e-10) || !(std::abs(m.determinant() - 1.0) <= 1e-10))
    throw DomainError("matrix is not a proper rotation");
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& o) const {
  return RotationMatrix(m_ * o.m_, Unchecked{});
}

RotationMatrix RotationMatrix::inverse() const {
  return RotationMatrix(m_.transpose(), Unchecked{});
}

RotationMatrix rotation_unchecked(const Mat3& m) {
  return RotationMatrix(m, RotationMatrix::Unchecked{});
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {a0 * o.a0 - a1 * o.a1 - a2 * o.a2 - a3 * o.a3,
          a0 * o.a1 + a1 * o.a0 + a2 * o.a3 - a3 * o.a2,
          a0 * o.a2 - a1 * o.a3 + a2 * o.a0 + a3 * o.a1,
          a0 * o.a3 + a1 * o.a2 - a2 * o.a1 + a3 * o.a0};
}

UnitQuaternion::UnitQuaternion(const Quaternion& q, Strictness s) {
  const double n = q.norm();
  if (s == Strictness::kReject) {
    if (!(std::abs(n - 1.0) <= 1e-12)) throw DomainError("quaternion is not a unit quaternion");
    q_ = q;
    return;
  }
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero quaternion");
  q_ = q * (1.0 / n);
}

UnitQuaternion UnitQuaternion::canonical() const {
  for (double c : q_.array()) {
    if (c > 0) return *this;
    if (c < 0) return -*this;
  }
  return *this;
}

Vec3 UnitQuaternion::rotate(const Vec3& v) const {
  return (q_ * Quaternion::pure(v) * q_.conj()).vec();
}

RotationMatrix tau(const UnitQuaternion& uq) {
  const Quaternion& q = uq.q();
  const double w = q.a0, x = q.a1, y = q.a2, z = q.a3;
  Mat3 m;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return rotation_unchecked(m);
}

RotationMatrix tau(const Quaternion& q, Strictness s) { return tau(UnitQuaternion(q, s)); }

UnitQuaternion quat_from_matrix(const RotationMatrix& rm) {
  const Mat3& m = rm.matrix();
  const double tr = m.trace();
  Quaternion q;
  if (tr >= m(0, 0) && tr >= m(1, 1) && tr >= m(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + tr);
    q = {0.25 * s, (m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s, (m(1, 0) - m(0, 1)) / s};
  } else if (m(0, 0) >= m(1, 1) && m(0, 0) >= m(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2));
    q = {(m(2, 1) - m(1, 2)) / s, 0.25 * s, (m(0, 1) + m(1, 0)) / s, (m(0, 2) + m(2, 0)) / s};
  } else if (m(1, 1) >= m(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2));
    q = {(m(0, 2) - m(2, 0)) / s, (m(0, 1) + m(1, 0)) / s, 0.25 * s, (m(1, 2) + m(2, 1)) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1));
    q = {(m(1, 0) - m(0, 1)) / s, (m(0, 2) + m(2, 0)) / s, (m(1, 2) + m(2, 1)) / s, 0.25 * s};
  }
  return UnitQuaternion(q).canonical();
}

Mat3 euler_matrix(const EulerAngles& e) {
  return rot_z(e.gamma) * rot_x(e.beta) * rot_z(e.alpha);
}

RotationMatrix to_matrix(const EulerAngles& e) { return rotation_unchecked(euler_matrix(e)); }

ZyzAngles zyz_from_matrix(const Mat3& r) {
  ZyzAngles z;
  z.b = std::atan2(0.5 * (std::hypot(r(2, 0), r(2, 1)) + std::hypot(r(0, 2), r(1, 2))), r(2, 2));
  // a and c separately are accurate to |error|/sin b; near a pole the matching
  // combination a + c (b small) or a - c (b near pi) is read off the upper block instead.
  z.a = std::atan2(r(1, 2), r(0, 2));
  z.c = std::atan2(r(2, 1), -r(2, 0));
  if (r(2, 2) >= 0) {
    const double sum = std::atan2(r(1, 0) - r(0, 1), r(0, 0) + r(1, 1));
    const double delta = 0.5 * wrap_pi(sum - (z.a + z.c));
    z.a += delta;
    z.c += delta;
  } else {
    const double diff = std::atan2(-(r(1, 0) + r(0, 1)), r(1, 1) - r(0, 0));
    const double delta = 0.5 * wrap_pi(diff - (z.a - z.c));
    z.a += delta;
    z.c -= delta;
  }
  return z;
}

ZyzAngles zyz_from_euler(const EulerAngles& e) {
  // Z(g) X(b) Z(a) = Z(g - pi/2) Y(b) Z(a + pi/2)
  return {e.gamma - 0.5 * kPi, e.beta, e.alpha + 0.5 * kPi};
}

EulerAngles euler_from_matrix(const RotationMatrix& rm) {
  const Mat3& m = rm.matrix();
  EulerAngles e;
  const double sb = 0.5 * (std::hypot(m(2, 0), m(2, 1)) + std::hypot(m(0, 2), m(1, 2)));
  e.beta = std::atan2(sb, m(2, 2));
  if (sb <= 1e-12) {
    e.gamma = 0.0;
    if (m(2, 2) > 0) {
      e.beta = 0.0;
      e.alpha = wrap_2pi(std::atan2(m(1, 0) - m(0, 1), m(0, 0) + m(1, 1)));
    } else {
      e.beta = kPi;
      e.alpha = wrap_2pi(std::atan2(-(m(1, 0) + m(0, 1)), m(0, 0) - m(1, 1)));
    }
    return e;
  }
  const ZyzAngles z = zyz_from_matrix(m);
  e.alpha = wrap_2pi(z.c - 0.5 * kPi);
  e.gamma = wrap_2pi(z.a + 0.5 * kPi);
  return e;
}

EulerAngles euler_from_quat(const UnitQuaternion& q) { return euler_from_matrix(tau(q)); }

UnitQuaternion quat_from_euler(const EulerAngles& e) {
  auto axis_quat = [](double angle, int axis) {
    Quaternion q{std::cos(0.5 * angle), 0, 0, 0};
    const double s = std::sin(0.5 * angle);
    if (axis == 1) q.a1 = s;
    if (axis == 3) q.a3 = s;
    return q;
  };
  const Quaternion q = axis_quat(e.gamma, 3) * axis_quat(e.beta, 1) * axis_quat(e.alpha, 3);
  return UnitQuaternion(q).canonical();
}

GreatCirclePair circle_from_pair(const Vec3& x_in, const Vec3& y_in) {
  const double nx = x_in.norm(), ny = y_in.norm();
  if (!(std::abs(nx - 1.0) <= 1e-9) || !(std::abs(ny - 1.0) <= 1e-9))
    throw DomainError("circle_from_pair expects unit vectors");
  GreatCirclePair c;
  c.x = x_in / nx;
  c.y = y_in / ny;
  const Vec3 cr = c.y.cross(c.x);
  const double d = c.x.dot(c.y);
  if (d < -1.0 + 1e-9) throw AntipodalPairError("x and y are antipodal");
  c.eta = std::atan2(cr.norm(), d);
  const double ch = std::cos(0.5 * c.eta);
  // sin(eta/2) / sin(eta) = 1 / (2 cos(eta/2)), so the axis never needs normalizing.
  const Vec3 v = cr / (2.0 * ch);
  c.q1 = UnitQuaternion(Quaternion{ch, v.x(), v.y(), v.z()});
  c.q2 = UnitQuaternion(Quaternion::pure(c.x + c.y));
  return c;
}

UnitQuaternion circle_point(const GreatCirclePair& c, double t) {
  return UnitQuaternion(c.q1.q() * std::cos(t) + c.q2.q() * std::sin(t));
}

}  // namespace so3radon
