#pragma once

#include <functional>
#include <vector>

#include "so3radon/harmonics.hpp"
#include "so3radon/rotations.hpp"

namespace so3radon {

// Great circle span(u, v) ∩ S^3 with u, v orthonormal.
struct QuaternionCircle {
  Quaternion u{1, 0, 0, 0};
  Quaternion v{0, 1, 0, 0};
};

QuaternionCircle to_quaternion_circle(const GreatCirclePair& c);
// Preimage of {g : g y = x}. Near-antipodal pairs, including x = -y, use the
// stabilizer form span(w, w*y) with tau(w) y = x, so no nudging is needed.
QuaternionCircle pair_circle(const Vec3& x, const Vec3& y);
// Spherical distance from q to the nearest point of the circle.
double circle_distance(const Quaternion& q, const QuaternionCircle& c);

// F(q) = f(tau(q)); even in q by construction.
class LiftedFunction {
 public:
  explicit LiftedFunction(const SO3Spectrum& f) : f_(&f) {}
  Complex operator()(const Quaternion& q) const;
  Complex operator()(const UnitQuaternion& q) const { return (*this)(q.q()); }
  int bandwidth() const { return f_->bandwidth(); }
  const SO3Spectrum& spectrum() const { return *f_; }

 private:
  const SO3Spectrum* f_;
};

using CircleFunction = std::function<Complex(const QuaternionCircle&)>;

// (1/2pi) int_0^{2pi} F(u cos t + v sin t) dt with n trapezoid nodes.
Complex geodesic_radon(const LiftedFunction& F, const QuaternionCircle& c, int n);
Complex geodesic_radon(const LiftedFunction& F, const GreatCirclePair& c, int n);
CircleFunction circle_average_oracle(const LiftedFunction& F, int n);

// Fhat(x, y): the circle average over the preimage of {g : g y = x}.
Complex pair_radon(const LiftedFunction& F, const Vec3& x, const Vec3& y, int n);

struct DualQuadrature {
  int sphere_degree = 10;  // rule for u on the geodesic sphere about q
  int circle_nodes = 10;   // uniform rule for v
};

// Quadrature over the family of great circles at distance rho from q.
struct CircleFamilySample {
  Quaternion q;
  double rho = 0.0;
  std::vector<QuaternionCircle> circles;
  std::vector<double> weights;  // sum to 1
};

CircleFamilySample circle_family(const Quaternion& q, double rho, const DualQuadrature& quad);
Complex dual_transform(const CircleFunction& phi, const Quaternion& q, double rho, const DualQuadrature& quad);

// Average of Fhat(x, y') over the small circle of radius rho about y.
Complex angle_density(const LiftedFunction& F, const Vec3& x, const Vec3& y, double rho, int small_circle_nodes,
                      int circle_nodes);

struct InversionControls {
  int chebyshev_nodes = 6;   // cos(theta) grid for the derivative fit
  int theta_nodes = 24;      // Gauss-Legendre nodes for the theta integral
  int circle_nodes = 12;     // nodes for each Fhat
  int sphere_degree = 10;    // S^2 rule for the z integrals
  int small_circle_nodes = 10;
  DualQuadrature dual;

  static InversionControls for_bandwidth(int K);
  InversionControls doubled() const;
};

struct InversionResult {
  Complex value;
  double estimated_error = 0.0;
};

// F(q) = Fhat^_{pi/2}(q) + 2 int_0^pi d/dcos(theta) [Fhat^_{theta/2}(q)] cos(theta/2) dtheta.
InversionResult helgason_invert(const CircleFunction& Fhat, const Quaternion& q, const InversionControls& c);

// f(g) = (1/4pi) int Fhat(gz, -z) dz
//      + (1/2pi) int_0^pi int d/dcos(theta) AF(gz, z; theta) dz cos(theta/2) dtheta.
InversionResult matthies_invert(const LiftedFunction& F, const RotationMatrix& g, const InversionControls& c);

struct IdentityCheck {
  Complex lhs;
  Complex rhs;
  double error() const { return std::abs(lhs - rhs); }
};

// (1/4pi) int Fhat(gz, -z) dz against Fhat^_{pi/2}(q), g = tau(q).
IdentityCheck matthies_identity_r0(const LiftedFunction& F, const Quaternion& q, const InversionControls& c);
// (1/4pi) int AF(gz, z; theta) dz against Fhat^_{theta/2}(q).
IdentityCheck matthies_identity_r1(const LiftedFunction& F, const Quaternion& q, double theta,
                                   const InversionControls& c);

}  // namespace so3radon
