#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3radon/random.hpp"

using namespace so3radon;

namespace {

double max_diff(const Mat3& a, const Mat3& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("tau basics") {
  CHECK(max_diff(tau(UnitQuaternion()).matrix(), Mat3::Identity()) == 0.0);
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    CHECK(max_diff(tau(q).matrix(), tau(-q).matrix()) < 1e-15);
    const Mat3 m = tau(q).matrix();
    CHECK(max_diff(m.transpose() * m, Mat3::Identity()) < 1e-14);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-14);
    // the matrix reproduces the quaternion sandwich q v conj(q)
    const Vec3 v = random_unit_vector(rng);
    CHECK((m * v - q.rotate(v)).norm() < 1e-14);
  }
}

TEST_CASE("tau of a z-axis quaternion is Z(theta)") {
  for (double theta : {0.0, 0.3, 1.7, 3.1, -2.2}) {
    const UnitQuaternion q(std::cos(theta / 2), 0, 0, std::sin(theta / 2));
    // q v conj(q) expanded by hand for v = e1, e2, e3
    Mat3 expected;
    expected << std::cos(theta), -std::sin(theta), 0, std::sin(theta), std::cos(theta), 0, 0, 0, 1;
    CHECK(max_diff(tau(q).matrix(), expected) < 1e-15);
    CHECK(max_diff(tau(q).matrix(), rot_z(theta)) < 1e-15);
  }
}

TEST_CASE("tau strictness flag") {
  CHECK_NOTHROW(tau(Quaternion{2, 0, 0, 0}, Strictness::kNormalize));
  CHECK(max_diff(tau(Quaternion{2, 0, 0, 0}, Strictness::kNormalize).matrix(), Mat3::Identity()) == 0.0);
  CHECK_THROWS_AS(tau(Quaternion{2, 0, 0, 0}, Strictness::kReject), DomainError);
  CHECK_THROWS_AS(UnitQuaternion(Quaternion{}), DomainError);
}

TEST_CASE("homomorphism tau(q p) = tau(q) tau(p)") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const UnitQuaternion q = random_unit_quaternion(rng), p = random_unit_quaternion(rng);
    CHECK(max_diff(tau(q * p).matrix(), (tau(q) * tau(p)).matrix()) < 1e-10);
  }
}

TEST_CASE("Euler and quaternion conversions") {
  const UnitQuaternion one = quat_from_euler({0, 0, 0});
  CHECK(one.a0() == 1.0);
  CHECK(one.a1() == 0.0);
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_real_distribution<double> u(0, kTwoPi), b(0, kPi);
    const EulerAngles e{u(rng), b(rng), u(rng)};
    const UnitQuaternion q = quat_from_euler(e);
    CHECK(q.a0() >= 0.0);
    CHECK(max_diff(tau(q).matrix(), euler_matrix(e)) < 1e-10);
    const EulerAngles back = euler_from_quat(q);
    CHECK(max_diff(euler_matrix(back), euler_matrix(e)) < 1e-10);
    CHECK(back.alpha >= 0.0);
    CHECK(back.alpha < kTwoPi);
    CHECK(back.gamma >= 0.0);
    CHECK(back.gamma < kTwoPi);
    CHECK(max_diff(tau(quat_from_matrix(to_matrix(e))).matrix(), euler_matrix(e)) < 1e-12);
  }
}

TEST_CASE("gimbal degeneracy sets gamma to zero") {
  const double theta = 1.3;
  for (double split : {0.0, 0.4, 1.0}) {
    const EulerAngles e{theta * split, 0.0, theta * (1 - split)};
    const EulerAngles back = euler_from_quat(quat_from_euler(e));
    CHECK(back.gamma == 0.0);
    CHECK(back.beta == 0.0);
    CHECK(max_diff(euler_matrix(back), euler_matrix(e)) < 1e-12);
  }
  for (double split : {0.0, 0.4, 1.0}) {
    const EulerAngles e{0.5 + split, kPi, 2.0 - split};
    const EulerAngles back = euler_from_quat(quat_from_euler(e));
    CHECK(back.gamma == 0.0);
    CHECK(back.beta == kPi);
    CHECK(max_diff(euler_matrix(back), euler_matrix(e)) < 1e-12);
  }
}

TEST_CASE("canonical sign") {
  CHECK(UnitQuaternion(-0.6, 0.8, 0, 0).canonical().a0() == doctest::Approx(0.6));
  const UnitQuaternion q = UnitQuaternion(0.0, -1.0, 0.0, 0.0).canonical();
  CHECK(q.a1() == 1.0);
  const UnitQuaternion r = UnitQuaternion(0.0, 0.0, -0.6, 0.8).canonical();
  CHECK(r.a2() == doctest::Approx(0.6));
}

TEST_CASE("RotationMatrix validation") {
  CHECK_NOTHROW(RotationMatrix(rot_x(0.3)));
  CHECK_THROWS_AS(RotationMatrix(Mat3(2.0 * Mat3::Identity())), DomainError);
  CHECK_THROWS_AS(RotationMatrix(Mat3(-Mat3::Identity())), DomainError);
}

TEST_CASE("circle_from_pair: stabilizer at x = y") {
  const Vec3 n(0, 0, 1);
  const GreatCirclePair c = circle_from_pair(n, n);
  CHECK(c.q1.a0() == 1.0);
  CHECK(c.q2.a3() == 1.0);
  CHECK(c.eta == 0.0);
  for (double t : {0.0, 0.5, 2.0, 4.0}) CHECK((tau(circle_point(c, t)) * n - n).norm() < 1e-15);
}

TEST_CASE("circle_from_pair: e1, e2") {
  const Vec3 x(1, 0, 0), y(0, 1, 0);
  const GreatCirclePair c = circle_from_pair(x, y);
  CHECK(c.eta == doctest::Approx(kPi / 2));
  const double r = std::sqrt(0.5);
  CHECK(c.q1.a0() == doctest::Approx(r));
  CHECK(c.q1.a3() == doctest::Approx(-r));
  CHECK(c.q2.a1() == doctest::Approx(r));
  CHECK(c.q2.a2() == doctest::Approx(r));
  for (double t : {0.0, kPi / 3, 1.7}) CHECK((tau(circle_point(c, t)) * y - x).norm() < 1e-10);
}

TEST_CASE("circle_from_pair rejects antipodal pairs") {
  CHECK_THROWS_AS(circle_from_pair(Vec3(0, 0, 1), Vec3(0, 0, -1)), AntipodalPairError);
  CHECK_THROWS_AS(circle_from_pair(Vec3(0, 0, 2), Vec3(0, 0, 1)), DomainError);
  Vec3 y = Vec3(1e-4, 0, -1).normalized();
  CHECK_NOTHROW(circle_from_pair(Vec3(0, 0, 1), y));  // 1 + x.y is about 5e-9
  CHECK_THROWS_AS(circle_from_pair(Vec3(0, 0, 1), Vec3(1e-6, 0, -1).normalized()), AntipodalPairError);
}

TEST_CASE("circle invariants for random pairs") {
  Rng rng(4);
  std::uniform_real_distribution<double> ut(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
    const GreatCirclePair c = circle_from_pair(x, y);
    CHECK(std::abs((c.q1.q() * c.q2.q().conj()).a0) < 1e-12);
    CHECK(std::abs(c.eta - std::acos(std::clamp(x.dot(y), -1.0, 1.0))) < 1e-7);
    const double t = ut(rng);
    const UnitQuaternion q = circle_point(c, t);
    CHECK(std::abs(q.q().norm() - 1.0) < 1e-15);
    CHECK((tau(q) * y - x).norm() < 1e-10);
    CHECK(max_diff(tau(circle_point(c, t + kPi)).matrix(), tau(q).matrix()) < 1e-14);
    // t = pi lands on -q1, the same rotation as t = 0
    const UnitQuaternion qpi = circle_point(c, kPi);
    CHECK(std::abs(qpi.a0() + c.q1.a0()) < 1e-15);
    // the planes of C_{x,y} and C_{-x,y} are orthogonal
    const GreatCirclePair d = circle_from_pair(Vec3(-x), y);
    for (const auto* a : {&c.q1, &c.q2})
      for (const auto* b : {&d.q1, &d.q2}) CHECK(std::abs(a->q().dot(b->q())) < 1e-10);
  }
}

TEST_CASE("the circle covers C_{x,y} twice") {
  // every rotation mapping y to x is hit: compose a stabilizer rotation with one circle point
  Rng rng(5);
  const Vec3 x = random_unit_vector(rng), y = random_unit_vector(rng);
  const GreatCirclePair c = circle_from_pair(x, y);
  const double s = 0.9;
  const Mat3 g = tau(circle_point(c, 0.0)).matrix() * Eigen::AngleAxisd(s, y).toRotationMatrix();
  int hits = 0;
  const int n = 20000;
  for (int j = 0; j < n; ++j)
    if (max_diff(tau(circle_point(c, kTwoPi * j / n)).matrix(), g) < 1e-3) ++hits;
  CHECK(hits >= 2);
  bool first_half = false, second_half = false;
  for (int j = 0; j < n; ++j)
    if (max_diff(tau(circle_point(c, kTwoPi * j / n)).matrix(), g) < 1e-3) (j < n / 2 ? first_half : second_half) = true;
  CHECK(first_half);
  CHECK(second_half);
}
