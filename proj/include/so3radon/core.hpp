#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace so3radon {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// x = -y has no circle of rotations mapping y to x through the
// stable formulas used here.
class AntipodalPairError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BandwidthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, double separation, double covering)
      : std::runtime_error(what), separation_(separation), covering_(covering) {}
  double separation() const { return separation_; }
  double covering() const { return covering_; }

 private:
  double separation_;
  double covering_;
};

class InfeasibleCubatureError : public std::runtime_error {
 public:
  InfeasibleCubatureError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unit vector from colatitude/longitude and back.
inline Vec3 from_spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct SphericalCoords {
  double theta;
  double phi;
};

inline SphericalCoords to_spherical(const Vec3& x) {
  double phi = std::atan2(x.y(), x.x());
  if (phi < 0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {std::atan2(std::hypot(x.x(), x.y()), x.z()), phi};
}

// Geodesic distance on S^2, stable near 0 and pi.
inline double sphere_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace so3radon
