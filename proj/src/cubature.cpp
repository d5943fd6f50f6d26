#include <algorithm>
#include <cmath>

#include "so3radon/parallel.hpp"
#include "so3radon/sampling.hpp"

namespace so3radon {

namespace {

// Real and imaginary parts of Y^m_k, m >= 0: a real basis of degree <= D.
Eigen::MatrixXd real_moment_rows(const std::vector<Vec3>& points, int D) {
  const int rows = (D + 1) * (D + 1);
  Eigen::MatrixXd A(rows, static_cast<Eigen::Index>(points.size()));
  parallel_chunks(points.size(), 256, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const auto y = sph_harm_table(D, points[j]);
      int r = 0;
      for (int k = 0; k <= D; ++k) {
        A(r++, static_cast<Eigen::Index>(j)) = y[harm_slot(k, 0)].real();
        for (int m = 1; m <= k; ++m) {
          A(r++, static_cast<Eigen::Index>(j)) = std::sqrt(2.0) * y[harm_slot(k, m)].real();
          A(r++, static_cast<Eigen::Index>(j)) = std::sqrt(2.0) * y[harm_slot(k, m)].imag();
        }
      }
    }
  });
  return A;
}

// sum_j w_j Y^m_k(x_j) minus its exact value sqrt(4 pi) [k = 0].
std::vector<Complex> moment_defect(const std::vector<Vec3>& points, const std::vector<double>& w, int D) {
  std::vector<Complex> c(static_cast<std::size_t>((D + 1) * (D + 1)), 0.0);
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto y = sph_harm_table(D, points[j]);
    for (std::size_t s = 0; s < c.size(); ++s) c[s] += w[j] * y[s];
  }
  c[0] -= std::sqrt(kFourPi);
  return c;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

// min |w - u|^2 subject to A w = b, w >= lower; primal active set on the bound constraints.
Eigen::VectorXd least_distance(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double u, double lower) {
  const Eigen::Index n = A.cols();
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, u);
  for (int it = 0; it < 4 * n + 20; ++it) {
    std::vector<Eigen::Index> free_idx, fixed_idx;
    for (Eigen::Index i = 0; i < n; ++i) (fixed[static_cast<std::size_t>(i)] ? fixed_idx : free_idx).push_back(i);
    if (free_idx.empty()) break;
    Eigen::MatrixXd Af(A.rows(), static_cast<Eigen::Index>(free_idx.size()));
    Eigen::VectorXd rhs = b;
    for (std::size_t i = 0; i < free_idx.size(); ++i) {
      Af.col(static_cast<Eigen::Index>(i)) = A.col(free_idx[i]);
      rhs -= u * A.col(free_idx[i]);
    }
    for (Eigen::Index i : fixed_idx) rhs -= lower * A.col(i);
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(Af);
    const Eigen::VectorXd d = cod.solve(rhs);
    for (std::size_t i = 0; i < free_idx.size(); ++i) w(free_idx[i]) = u + d(static_cast<Eigen::Index>(i));
    for (Eigen::Index i : fixed_idx) w(i) = lower;

    Eigen::Index worst = -1;
    double worst_value = lower;
    for (Eigen::Index i : free_idx)
      if (w(i) < worst_value) worst_value = w(i), worst = i;
    if (worst >= 0) {
      // clamp the worst violator and try again
      fixed[static_cast<std::size_t>(worst)] = 1;
      continue;
    }
    if (fixed_idx.empty()) break;
    // multipliers of the bound constraints: nu = lower - u - A^T lambda with d = Af^T lambda
    const Eigen::VectorXd lambda = Af.transpose().completeOrthogonalDecomposition().solve(d);
    Eigen::Index release = -1;
    double most_negative = -1e-12 * u;
    for (Eigen::Index i : fixed_idx) {
      const double nu = lower - u - A.col(i).dot(lambda);
      if (nu < most_negative) most_negative = nu, release = i;
    }
    if (release < 0) break;
    fixed[static_cast<std::size_t>(release)] = 0;
  }
  return w;
}

}  // namespace

SphereCubature sphere_cubature(const std::vector<Vec3>& points, int D, double floor_fraction) {
  if (D < 0) throw DomainError("cubature degree must be nonnegative");
  if (points.empty()) throw DomainError("cubature on an empty point set");
  const double mean = kFourPi / static_cast<double>(points.size());
  const Eigen::MatrixXd A = real_moment_rows(points, D);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(A.rows());
  b(0) = std::sqrt(kFourPi);
  const Eigen::VectorXd w = least_distance(A, b, mean, floor_fraction * mean);
  SphereCubature out;
  out.degree = D;
  out.weights.assign(w.data(), w.data() + w.size());
  out.residual = max_abs(moment_defect(points, out.weights, D));
  if (out.residual > kCubatureTolerance)
    throw InfeasibleCubatureError("no positive cubature of this degree on the lattice", out.residual);
  return out;
}

ProductCubature cubature_weights(const ProductLattice& lattice, int D, double floor_fraction) {
  ProductCubature out;
  out.lattice = lattice;
  out.degree = D;
  // the weight floor for the product is floor_fraction times its mean, split evenly across factors
  const double f = std::sqrt(floor_fraction);
  const auto first = [&]() {
    try {
      return sphere_cubature(lattice.first.points, D, f);
    } catch (const InfeasibleCubatureError& e) {
      throw InfeasibleCubatureError("no positive product cubature of this degree on the lattice", e.residual());
    }
  };
  const SphereCubature a = first();
  const SphereCubature b = lattice.second.points == lattice.first.points ? a : sphere_cubature(lattice.second.points, D, f);
  out.first_weights = a.weights;
  out.second_weights = b.weights;
  // moments of Y^a(x) conj(Y^b)(y) factor into the two sphere moments
  auto ma = moment_defect(lattice.first.points, a.weights, D);
  auto mb = moment_defect(lattice.second.points, b.weights, D);
  ma[0] += std::sqrt(kFourPi);
  mb[0] += std::sqrt(kFourPi);
  double r = 0.0;
  for (std::size_t i = 0; i < ma.size(); ++i)
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const Complex exact = (i == 0 && j == 0) ? Complex(kFourPi) : Complex(0.0);
      r = std::max(r, std::abs(ma[i] * std::conj(mb[j]) - exact));
    }
  out.residual = r;
  if (r > kCubatureTolerance) throw InfeasibleCubatureError("product cubature residual above tolerance", r);
  return out;
}

double ProductCubature::min_weight() const {
  return *std::min_element(first_weights.begin(), first_weights.end()) *
         *std::min_element(second_weights.begin(), second_weights.end());
}

double ProductCubature::max_weight() const {
  return *std::max_element(first_weights.begin(), first_weights.end()) *
         *std::max_element(second_weights.begin(), second_weights.end());
}

double ProductCubature::median_weight() const {
  std::vector<double> all;
  all.reserve(size());
  for (double a : first_weights)
    for (double b : second_weights) all.push_back(a * b);
  const auto mid = all.begin() + static_cast<std::ptrdiff_t>(all.size() / 2);
  std::nth_element(all.begin(), mid, all.end());
  return *mid;
}

int required_product_degree(int K) {
  if (K < 0) throw DomainError("bandwidth must be nonnegative");
  return 2 * K;
}

double rho_for_bandwidth(int K, double C) {
  if (K < 0 || !(C > 0.0)) throw DomainError("bandwidth and lattice constant must be positive");
  return C / std::sqrt(static_cast<double>(K) * (K + 1) + 1.0);
}

DegreePolicy degree_policy(double rho, double C) {
  if (!(rho > 0.0)) throw DomainError("lattice radius must be positive");
  const double omega = (C / rho) * (C / rho) - 1.0;
  int K = 0;
  while (static_cast<double>(K + 1) * (K + 2) <= omega * (1.0 + 1e-12)) ++K;
  return {omega, K, required_product_degree(K)};
}

double tune_lattice_constant(int K, double lo, double hi, int steps) {
  const auto feasible = [K](double C) {
    const double rho = rho_for_bandwidth(K, C);
    if (rho >= 0.5 * kPi) return false;
    try {
      sphere_cubature(build_lattice_s2(rho).points, required_product_degree(K), std::sqrt(0.1));
      return true;
    } catch (const InfeasibleCubatureError&) {
      return false;
    } catch (const CertificationError&) {
      return false;
    }
  };
  if (!feasible(lo)) throw InfeasibleCubatureError("lattice constant search: lower end infeasible", 0.0);
  if (feasible(hi)) return hi;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace so3radon
