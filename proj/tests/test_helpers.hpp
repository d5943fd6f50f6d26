#pragma once

#include <cmath>
#include <vector>

#include "so3radon/random.hpp"

namespace testing_util {

using namespace so3radon;

// Rodrigues: P_k^m(t) = (-1)^m (1-t^2)^{m/2} / (2^k k!) d^{k+m}/dt^{k+m} (t^2-1)^k,
// evaluated from the exact binomial expansion in long double.
inline long double rodrigues_legendre(int k, int m, long double t) {
  std::vector<long double> c(static_cast<std::size_t>(2 * k + 1), 0.0L);  // coefficients of (t^2-1)^k
  long double binom = 1.0L;
  for (int j = 0; j <= k; ++j) {
    c[static_cast<std::size_t>(2 * j)] = ((k - j) % 2 == 0 ? 1.0L : -1.0L) * binom;
    binom = binom * (k - j) / (j + 1);
  }
  for (int d = 0; d < k + m; ++d) {
    for (std::size_t p = 0; p + 1 < c.size(); ++p) c[p] = c[p + 1] * static_cast<long double>(p + 1);
    c.back() = 0.0L;
  }
  long double v = 0.0L;
  for (std::size_t p = c.size(); p-- > 0;) v = v * t + c[p];
  long double scale = 1.0L;
  for (int j = 1; j <= k; ++j) scale *= 2.0L * j;
  v /= scale;
  return (m % 2 == 0 ? 1.0L : -1.0L) * std::pow(1.0L - t * t, 0.5L * m) * v;
}

// Sum_j over Y_k(x) with coefficient vector c.
inline Complex expand(const CMatrix& T, int k, int row, const Vec3& x) {
  Complex s = 0.0;
  for (int j = 0; j < 2 * k + 1; ++j) s += T(row, j) * sph_harm(k, j - k, x);
  return s;
}

}  // namespace testing_util
