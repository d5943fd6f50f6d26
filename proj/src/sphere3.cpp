#include "so3radon/sphere3.hpp"

#include <cmath>

#include "so3radon/quadrature.hpp"

namespace so3radon {

namespace {

Quaternion from_basis(const Quaternion (&e)[3], const Vec3& w) { return e[0] * w.x() + e[1] * w.y() + e[2] * w.z(); }

// Chebyshev interpolant on the nodes cos(pi (j + 1/2) / N).
class ChebyshevSeries {
 public:
  static std::vector<double> nodes(int n) {
    std::vector<double> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = std::cos(kPi * (j + 0.5) / n);
    return c;
  }

  explicit ChebyshevSeries(const std::vector<Complex>& values) {
    const int n = static_cast<int>(values.size());
    a_.assign(values.size(), 0.0);
    for (int k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) s += values[static_cast<std::size_t>(j)] * std::cos(kPi * k * (j + 0.5) / n);
      a_[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * s / static_cast<double>(n);
    }
  }

  ChebyshevSeries derivative() const {
    const int n = static_cast<int>(a_.size());
    ChebyshevSeries d;
    d.a_.assign(static_cast<std::size_t>(std::max(n - 1, 1)), 0.0);
    std::vector<Complex> b(static_cast<std::size_t>(n + 1), 0.0);
    for (int k = n - 1; k >= 1; --k)
      b[static_cast<std::size_t>(k - 1)] = b[static_cast<std::size_t>(k + 1)] + 2.0 * k * a_[static_cast<std::size_t>(k)];
    for (std::size_t k = 0; k < d.a_.size(); ++k) d.a_[k] = b[k];
    d.a_[0] *= 0.5;
    return d;
  }

  Complex operator()(double x) const {
    Complex b1 = 0.0, b2 = 0.0;
    for (std::size_t k = a_.size(); k-- > 1;) {
      const Complex b0 = 2.0 * x * b1 - b2 + a_[k];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + a_[0];
  }

  // magnitude of the two highest coefficients
  double tail() const {
    double t = 0.0;
    for (std::size_t k = a_.size() >= 2 ? a_.size() - 2 : 0; k < a_.size(); ++k) t += std::abs(a_[k]);
    return t;
  }

 private:
  ChebyshevSeries() = default;
  std::vector<Complex> a_;
};

struct DerivativeIntegral {
  Complex value;
  double error;
};

// int_0^pi H'(cos theta) cos(theta/2) dtheta from samples of H at the Chebyshev nodes.
DerivativeIntegral integrate_derivative(const std::vector<Complex>& samples, int theta_nodes) {
  const ChebyshevSeries series(samples);
  const ChebyshevSeries d = series.derivative();
  auto integrate = [&](int n) {
    const GaussLegendre gl = gauss_legendre(n);
    Complex s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double theta = 0.5 * kPi * (gl.nodes[i] + 1.0);
      s += gl.weights[i] * d(std::cos(theta)) * std::cos(0.5 * theta);
    }
    return 0.5 * kPi * s;
  };
  const Complex full = integrate(theta_nodes);
  const Complex half = integrate(std::max(1, theta_nodes / 2));
  const double n = static_cast<double>(samples.size());
  return {full, std::abs(full - half) + kPi * n * n * series.tail()};
}

Vec3 small_circle_point(const Vec3& y, const Vec3& e1, const Vec3& e2, double rho, double s) {
  return std::cos(rho) * y + std::sin(rho) * (std::cos(s) * e1 + std::sin(s) * e2);
}

}  // namespace

QuaternionCircle to_quaternion_circle(const GreatCirclePair& c) { return {c.q1.q(), c.q2.q()}; }

QuaternionCircle pair_circle(const Vec3& x_in, const Vec3& y_in) {
  const Vec3 x = x_in.normalized(), y = y_in.normalized();
  if (x.dot(y) >= -1.0 + 1e-9) return to_quaternion_circle(circle_from_pair(x, y));
  const Vec3 s = x + y;
  // pi-rotation about w maps y to x: w is the bisector, or any axis normal to x when x = -y
  Vec3 w = s.norm() > 1e-8 ? Vec3(s.normalized()) : Vec3(x.unitOrthogonal());
  // cancellation in x + y leaves w slightly off the bisecting plane; project back
  const Vec3 d = x - y;
  w = (w - (w.dot(d) / d.squaredNorm()) * d).normalized();
  const Quaternion qw = Quaternion::pure(w);
  return {qw, qw * Quaternion::pure(y)};
}

double circle_distance(const Quaternion& q, const QuaternionCircle& c) {
  const double a = q.dot(c.u), b = q.dot(c.v);
  return std::acos(std::min(1.0, std::sqrt(a * a + b * b) / q.norm()));
}

Complex LiftedFunction::operator()(const Quaternion& q) const { return synth_so3(*f_, tau(q, Strictness::kNormalize)); }

Complex geodesic_radon(const LiftedFunction& F, const QuaternionCircle& c, int n) {
  if (n < 1) throw DomainError("geodesic_radon needs at least one node");
  Complex s = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    s += F(c.u * std::cos(t) + c.v * std::sin(t));
  }
  return s / static_cast<double>(n);
}

Complex geodesic_radon(const LiftedFunction& F, const GreatCirclePair& c, int n) {
  return geodesic_radon(F, to_quaternion_circle(c), n);
}

CircleFunction circle_average_oracle(const LiftedFunction& F, int n) {
  return [F, n](const QuaternionCircle& c) { return geodesic_radon(F, c, n); };
}

Complex pair_radon(const LiftedFunction& F, const Vec3& x, const Vec3& y, int n) {
  return geodesic_radon(F, pair_circle(x, y), n);
}

CircleFamilySample circle_family(const Quaternion& q_in, double rho, const DualQuadrature& quad) {
  if (!(rho >= 0.0 && rho <= 0.5 * kPi + 1e-15)) throw DomainError("dual transform distance outside [0, pi/2]");
  if (quad.circle_nodes < 1) throw DomainError("dual transform needs circle nodes");
  const Quaternion q = q_in * (1.0 / q_in.norm());
  const Quaternion e[3] = {q * Quaternion{0, 1, 0, 0}, q * Quaternion{0, 0, 1, 0}, q * Quaternion{0, 0, 0, 1}};
  const SphereQuadrature sq = sphere_quadrature(quad.sphere_degree);
  CircleFamilySample out;
  out.q = q;
  out.rho = rho;
  const int m = quad.circle_nodes;
  for (std::size_t a = 0; a < sq.nodes.size(); ++a) {
    const Vec3& w = sq.nodes[a];
    const Quaternion u = q * std::cos(rho) + from_basis(e, w) * std::sin(rho);
    const Vec3 f1 = w.unitOrthogonal();
    const Vec3 f2 = w.cross(f1);
    for (int j = 0; j < m; ++j) {
      // v and -v span the same circle, so half a turn suffices
      const double s = kPi * j / m;
      out.circles.push_back({u, from_basis(e, std::cos(s) * f1 + std::sin(s) * f2)});
      out.weights.push_back(sq.weights[a] / (kFourPi * m));
    }
  }
  return out;
}

Complex dual_transform(const CircleFunction& phi, const Quaternion& q, double rho, const DualQuadrature& quad) {
  const CircleFamilySample fam = circle_family(q, rho, quad);
  Complex s = 0.0;
  for (std::size_t i = 0; i < fam.circles.size(); ++i) s += fam.weights[i] * phi(fam.circles[i]);
  return s;
}

Complex angle_density(const LiftedFunction& F, const Vec3& x, const Vec3& y_in, double rho, int small_circle_nodes,
                      int circle_nodes) {
  if (!(rho >= 0.0 && rho <= kPi)) throw DomainError("angle density radius outside [0, pi]");
  if (small_circle_nodes < 1) throw DomainError("angle density needs small-circle nodes");
  const Vec3 y = y_in.normalized();
  const Vec3 e1 = y.unitOrthogonal();
  const Vec3 e2 = y.cross(e1);
  Complex s = 0.0;
  for (int j = 0; j < small_circle_nodes; ++j) {
    const double t = kTwoPi * j / small_circle_nodes;
    s += pair_radon(F, x, small_circle_point(y, e1, e2, rho, t), circle_nodes);
  }
  return s / static_cast<double>(small_circle_nodes);
}

InversionControls InversionControls::for_bandwidth(int K) {
  InversionControls c;
  c.chebyshev_nodes = K + 4;
  c.theta_nodes = 24;
  c.circle_nodes = 2 * K + 4;
  c.sphere_degree = 2 * K + 2;
  c.small_circle_nodes = K + 3;
  c.dual.sphere_degree = 2 * K + 2;
  c.dual.circle_nodes = K + 2;
  return c;
}

InversionControls InversionControls::doubled() const {
  InversionControls c = *this;
  c.chebyshev_nodes *= 2;
  c.theta_nodes *= 2;
  c.circle_nodes *= 2;
  c.sphere_degree = 2 * c.sphere_degree + 1;
  c.small_circle_nodes *= 2;
  c.dual.sphere_degree = 2 * c.dual.sphere_degree + 1;
  c.dual.circle_nodes *= 2;
  return c;
}

InversionResult helgason_invert(const CircleFunction& Fhat, const Quaternion& q, const InversionControls& c) {
  const auto cs = ChebyshevSeries::nodes(c.chebyshev_nodes);
  std::vector<Complex> h;
  for (double x : cs) h.push_back(dual_transform(Fhat, q, 0.5 * std::acos(x), c.dual));
  const DerivativeIntegral integral = integrate_derivative(h, c.theta_nodes);
  const Complex base = dual_transform(Fhat, q, 0.5 * kPi, c.dual);
  return {base + 2.0 * integral.value, 2.0 * integral.error};
}

namespace {

Complex first_term(const LiftedFunction& F, const Mat3& g, const InversionControls& c) {
  const SphereQuadrature sq = sphere_quadrature(c.sphere_degree);
  Complex s = 0.0;
  for (std::size_t a = 0; a < sq.nodes.size(); ++a)
    s += sq.weights[a] * pair_radon(F, g * sq.nodes[a], -sq.nodes[a], c.circle_nodes);
  return s / kFourPi;
}

Complex averaged_angle_density(const LiftedFunction& F, const Mat3& g, double theta, const InversionControls& c) {
  const SphereQuadrature sq = sphere_quadrature(c.sphere_degree);
  Complex s = 0.0;
  for (std::size_t a = 0; a < sq.nodes.size(); ++a)
    s += sq.weights[a] *
         angle_density(F, g * sq.nodes[a], sq.nodes[a], theta, c.small_circle_nodes, c.circle_nodes);
  return s / kFourPi;
}

}  // namespace

InversionResult matthies_invert(const LiftedFunction& F, const RotationMatrix& g, const InversionControls& c) {
  const auto cs = ChebyshevSeries::nodes(c.chebyshev_nodes);
  std::vector<Complex> m;
  for (double x : cs) m.push_back(averaged_angle_density(F, g.matrix(), std::acos(x), c));
  const DerivativeIntegral integral = integrate_derivative(m, c.theta_nodes);
  return {first_term(F, g.matrix(), c) + 2.0 * integral.value, 2.0 * integral.error};
}

IdentityCheck matthies_identity_r0(const LiftedFunction& F, const Quaternion& q, const InversionControls& c) {
  const Mat3 g = tau(q, Strictness::kNormalize).matrix();
  return {first_term(F, g, c), dual_transform(circle_average_oracle(F, c.circle_nodes), q, 0.5 * kPi, c.dual)};
}

IdentityCheck matthies_identity_r1(const LiftedFunction& F, const Quaternion& q, double theta,
                                   const InversionControls& c) {
  const Mat3 g = tau(q, Strictness::kNormalize).matrix();
  return {averaged_angle_density(F, g, theta, c),
          dual_transform(circle_average_oracle(F, c.circle_nodes), q, 0.5 * theta, c.dual)};
}

}  // namespace so3radon
