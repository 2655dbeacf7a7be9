#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>

#include "stripcalc/errors.hpp"

namespace stripcalc {

using Complex = std::complex<double>;
using Eigen::ArrayXcd;
using Eigen::ArrayXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

enum class Parity { Even, Odd, None };

/// Symmetric uniform grid {-L, -L+h, ..., L}; L/h must be an integer, so the
/// grid has odd size and contains 0. The implied periodization length is
/// N*h = 2L + h, which makes the centered discrete transform below an exact
/// inverse pair without a Nyquist bin.
struct GridSpec {
  double half_width = 1.0;  // L
  double step = 1.0 / 64;   // h

  static GridSpec make(double L, double h);

  Index size() const { return 2 * static_cast<Index>(std::llround(half_width / step)) + 1; }
  double point(Index i) const { return -half_width + static_cast<double>(i) * step; }
  double period() const { return static_cast<double>(size()) * step; }
  double frequency_step() const { return 2.0 * kPi / period(); }
  /// Centered reciprocal node xi_k = 2 pi k / period, k in [-(N-1)/2, (N-1)/2].
  double frequency(Index k) const { return frequency_step() * static_cast<double>(k); }
  Index max_mode() const { return (size() - 1) / 2; }
  double nyquist() const { return frequency(max_mode()); }
  ArrayXd points() const;

  bool operator==(const GridSpec& o) const {
    return half_width == o.half_width && step == o.step;
  }
};

/// Uniformly sampled complex-valued function on a symmetric interval. The
/// optional evaluator supplies exact off-grid values (closed forms,
/// band-limited extensions); without it, at() falls back to local Lagrange
/// interpolation and returns 0 outside the grid.
struct GridFunction {
  GridSpec grid;
  ArrayXcd values;
  Parity parity = Parity::None;
  std::function<Complex(double)> evaluator;

  Complex at(double x) const;
  double max_abs() const { return values.size() ? values.abs().maxCoeff() : 0.0; }

  /// Checks size and the declared parity (1e-12 relative). Throws InvalidGrid.
  void validate() const;
};

/// Samples f on the grid and keeps f as the off-grid evaluator.
GridFunction sample(const GridSpec& grid, const std::function<Complex(double)>& f,
                    Parity parity = Parity::None);
GridFunction sample_real(const GridSpec& grid, const std::function<double(double)>& f,
                         Parity parity = Parity::None);

/// Declared Fourier support: the interval [lo, hi], or the symmetric pair
/// [-hi, -lo] U [lo, hi] when two_sided is set (0 <= lo <= hi).
struct SpectralSupport {
  double lo = 0.0;
  double hi = 0.0;
  bool two_sided = false;

  static SpectralSupport interval(double a, double b) { return {a, b, false}; }
  static SpectralSupport symmetric_pair(double a, double b) { return {a, b, true}; }

  bool contains(double xi) const {
    if (two_sided) {
      const double a = std::abs(xi);
      return a >= lo && a <= hi;
    }
    return xi >= lo && xi <= hi;
  }
  double max_abs() const {
    return two_sided ? hi : std::max(std::abs(lo), std::abs(hi));
  }
  /// Distance of the support from 0 (inner edge).
  double min_abs() const {
    if (two_sided) return lo;
    if (lo <= 0.0 && hi >= 0.0) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
  }
};

/// Fourier-side object: samples of F^ on the reciprocal grid of `grid`
/// (convention F^(xi) = \int F(x) e^{-i x xi} dx). fourier_values[i] holds
/// F^(xi_k) with k = i - (N-1)/2. The optional time_evaluator gives exact
/// time-side values, e.g. for band-limited closed forms.
struct SpectralObject {
  GridSpec grid;
  ArrayXcd fourier_values;
  SpectralSupport support;
  std::function<Complex(double)> time_evaluator;

  Complex value_at_mode(Index k) const { return fourier_values[k + grid.max_mode()]; }
  double max_abs() const { return fourier_values.size() ? fourier_values.abs().maxCoeff() : 0.0; }

  /// Checks |F^| < 1e-10 * scale outside the declared support. Throws
  /// SupportViolation when the declaration is inconsistent with the samples.
  void validate() const;
};

/// Discrete approximation of F^(xi_k) = \int F e^{-i x xi_k} dx on the
/// centered reciprocal grid. Exact inverse of inverse_transform.
SpectralObject forward_transform(const GridFunction& f);
GridFunction inverse_transform(const SpectralObject& F);

/// Shrinks the declared support to the modes with |F^| >= rel_threshold times
/// the peak (a symmetric interval). Transforms of decaying functions carry
/// the full band as declared support; tightening it keeps exponential
/// Fourier-side weights from acting on rounding noise.
SpectralObject tighten_support(const SpectralObject& F, double rel_threshold = 1e-12);

/// Inverse transform that also attaches the trigonometric-interpolant
/// evaluator x -> (1/P) sum_k F^(xi_k) e^{i x xi_k} restricted to the
/// declared support bins (cost O(#support bins) per call).
GridFunction inverse_transform_with_evaluator(const SpectralObject& F);

/// k-th spectral derivative. Requires wrap-compatible samples (the
/// periodization must not jump at +-L); otherwise throws NonDecayingInput.
GridFunction spectral_derivative(const GridFunction& f, int k);

/// Multiplies F^ by (1 + xi^2)^{sigma/2} and transforms back.
GridFunction bessel_potential(const GridFunction& f, double sigma);

/// True when |f| <= tol * max(1, ||f||_inf) on the outer `fraction` of the
/// grid (both ends); compactly supported functions pass trivially.
bool boundary_decay_ok(const GridFunction& f, double tol = 1e-8, double fraction = 0.05);
void require_boundary_decay(const GridFunction& f, const char* who, double tol = 1e-8);

/// Weaker guard for operations that tolerate bounded inputs: the periodic
/// continuation must not jump at the seam (automatic for even samples).
void require_wrap_continuity(const GridFunction& f, const char* who, double tol = 1e-6);

/// Discrete L^q norm (h-weighted sum; q = inf gives the sup norm).
double lq_norm(const GridFunction& f, double q);
double lq_norm_weighted(const GridFunction& f, double q,
                        const std::function<double(double)>& weight);

}  // namespace stripcalc
