// Test-local oracles, independent of the library's quadrature and transform
// paths: adaptive Simpson integration, Riemann scans, and a tiny regression
// helper. Expected values asserted in the suites come from these.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = std::abs(left + right - whole);
  // Relative floor: never chase below round-off of the local values.
  const double floor_tol = 1e-15 * (std::abs(left) + std::abs(right) + std::abs(whole));
  if (depth <= 0 || err < 15.0 * std::max(tol, floor_tol))
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a, b]. Integration runs over fixed chunks so that
/// compactly supported integrands cannot be missed by the first probes.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, double chunk = 0.125) {
  if (!(b > a)) return 0.0;
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / chunk)));
  const double len = (b - a) / pieces;
  double acc = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * len, hi = lo + len;
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = len / 6.0 * (fa + 4.0 * fm + fb);
    acc += simpson_rec(f, lo, hi, fa, fm, fb, whole, tol / pieces, 24);
  }
  return acc;
}

/// Dense scan maximum of f over [a, b].
inline double scan_max(const std::function<double(double)>& f, double a, double b,
                       int points = 200001) {
  double best = -1e300;
  for (int i = 0; i < points; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / (points - 1);
    best = std::max(best, f(x));
  }
  return best;
}

/// Ordinary least squares for y ~ X beta (small systems, normal equations).
inline std::vector<double> least_squares(const std::vector<std::vector<double>>& X,
                                         const std::vector<double>& y) {
  const std::size_t n = X.size(), k = X.front().size();
  std::vector<std::vector<double>> A(k, std::vector<double>(k, 0.0));
  std::vector<double> b(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      b[p] += X[i][p] * y[i];
      for (std::size_t q = 0; q < k; ++q) A[p][q] += X[i][p] * X[i][q];
    }
  }
  // Gaussian elimination with partial pivoting.
  std::vector<double> beta(k, 0.0);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < k; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t col = k; col-- > 0;) {
    double s = b[col];
    for (std::size_t c = col + 1; c < k; ++c) s -= A[col][c] * beta[c];
    beta[col] = s / A[col][col];
  }
  return beta;
}

}  // namespace oracle
