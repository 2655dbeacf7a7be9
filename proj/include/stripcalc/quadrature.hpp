#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "stripcalc/errors.hpp"

namespace stripcalc {

namespace detail {
// Gauss-Legendre nodes/weights on [-1, 1], 16 points.
inline constexpr std::array<double, 8> kGL16Nodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
inline constexpr std::array<double, 8> kGL16Weights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
}  // namespace detail

/// 16-point Gauss-Legendre rule on [a, b].
template <class F>
double gauss_legendre(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < detail::kGL16Nodes.size(); ++i) {
    const double dx = half * detail::kGL16Nodes[i];
    acc += detail::kGL16Weights[i] * (f(mid + dx) + f(mid - dx));
  }
  return acc * half;
}

/// Adaptive bisection built on the 16-point rule. The error estimate for a
/// panel is |whole - (left + right)|; panels are split until it drops below
/// the tolerance apportioned to them.
template <class F>
double adaptive_quadrature(F&& f, double a, double b, double abs_tol = 1e-12,
                           int max_depth = 40) {
  struct Rec {
    const std::remove_reference_t<F>& f;
    double abs_tol;
    int max_depth;
    double run(double a, double b, double whole, int depth) const {
      const double m = 0.5 * (a + b);
      const double left = gauss_legendre(f, a, m);
      const double right = gauss_legendre(f, m, b);
      const double err = std::abs(whole - (left + right));
      if (err < abs_tol || depth >= max_depth)
        return left + right;
      return run(a, m, left, depth + 1) + run(m, b, right, depth + 1);
    }
  };
  const double whole = gauss_legendre(f, a, b);
  return Rec{f, abs_tol, max_depth}.run(a, b, whole, 0);
}

/// Integrates an oscillatory f over [a, b] with uniform panels no longer than
/// max_panel (one rule application each). Suitable when the integrand's
/// variation scale is known, e.g. Fourier-type integrals.
template <class F>
double panel_quadrature(F&& f, double a, double b, double max_panel) {
  if (!(b > a)) return 0.0;
  if (!(max_panel > 0)) throw QuadratureDivergence("panel length must be positive");
  const long panels = std::max<long>(1, static_cast<long>(std::ceil((b - a) / max_panel)));
  const double len = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (long i = 0; i < panels; ++i) {
    const double lo = a + static_cast<double>(i) * len;
    acc += gauss_legendre(f, lo, lo + len);
  }
  return acc;
}

}  // namespace stripcalc
