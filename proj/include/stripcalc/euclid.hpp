#pragma once

#include <vector>

#include "stripcalc/grid.hpp"

namespace stripcalc {

/// R^n with the standard Laplacian and drift character chi(x) = e^{<v,x>}.
/// Right Haar measure = Lebesgue, modular function = 1, local and global
/// dimensions both n, sphere-growth exponent delta = 1.
struct EuclidGroup {
  int n = 1;
  Eigen::VectorXd drift;  // v; zero vector means no drift

  static EuclidGroup make(int n, const Eigen::VectorXd& v);
  static EuclidGroup line(double v1);  // R^1 convenience

  double drift_norm() const { return drift.size() ? drift.norm() : 0.0; }
  double b_X() const { return 0.5 * drift_norm(); }
  int d0() const { return n; }
  int d_infinity() const { return n; }
  double delta() const { return 1.0; }
};

/// Radial profile of a convolution kernel on R^n.
struct RadialKernel {
  int dim = 1;
  double r_max = 0.0;
  ArrayXd radii;
  ArrayXcd values;

  double step() const { return radii.size() > 1 ? radii[1] - radii[0] : 0.0; }
  Complex at(double r) const;
};

struct KernelOptions {
  double r_max = 8.0;
  Index points = 1025;
  /// Highest frequency content expected in the multiplier samples; the
  /// quadrature panels resolve this plus the kernel's own oscillation.
  double integrand_scale = 1.0;
  double decay_tol = 1e-8;
};

/// Convolution kernel of F(sqrt(Delta)) on R^n by radial (Hankel-type)
/// quadrature of
///   k(r) = (2 pi)^{-n/2} r^{1-n/2} \int_0^inf F(l) J_{n/2-1}(l r) l^{n/2} dl.
/// For n = 1 this is the cosine transform (1/pi) \int F(l) cos(l r) dl.
/// Throws QuadratureDivergence when F fails the tail-decay estimate.
RadialKernel kernel_of_multiplier(const GridFunction& F, int n,
                                  const KernelOptions& opts = {});

/// Scalar field sampled on a Cartesian grid, n in {1, 2} (same spec per axis).
struct Field {
  int dim = 1;
  GridSpec axis;
  ArrayXcd values;  // size N (dim 1) or N*N row-major (dim 2)

  Index cells() const { return values.size(); }
  /// Coordinates of flat index i.
  Eigen::Vector2d coords(Index i) const;
  double cell_measure() const { return dim == 1 ? axis.step : axis.step * axis.step; }
  double max_abs() const { return values.size() ? values.abs().maxCoeff() : 0.0; }
};

Field zero_field(int dim, const GridSpec& axis);

/// L^p norm with respect to chi_weight(x) dx (pass 1 for plain Lebesgue).
double field_lp_norm(const Field& f, double p, const EuclidGroup& G,
                     double chi_exponent = 0.0);

/// chi^{-1/2}-conjugated kernel of F(D_X): e^{-<v,x>/2} k_{F(sqrt Delta)}(x).
Field drift_kernel(const GridFunction& F, const EuclidGroup& G,
                   const KernelOptions& opts = {});

struct PropagationReport {
  double leaked_fraction = 0.0;
  double eps_grid = 0.0;
  double total_mass = 0.0;
  bool pass = false;
};

/// Checks finite propagation speed: for F^ supported in [-r, r] the kernel
/// must live in the ball of radius r; reports the mass fraction leaked
/// outside radius r (1 + eps_grid).
PropagationReport finite_propagation_check(const SpectralObject& F_hat, double r,
                                           double tol, int n = 1);

struct PlancherelReport {
  double kernel_side = 0.0;    // || k_{F(sqrt Delta)} ||_{L^2(mu)}
  double spectral_side = 0.0;  // ( c_n \int |F|^2 l^{n-1} dl )^{1/2}
  double ratio = 1.0;
};

/// Spectral-measure consistency check; c_n = vol(S^{n-1}) / (2 pi)^n.
PlancherelReport plancherel_check(const GridFunction& F, int n,
                                  const KernelOptions& opts = {});

/// \int_{|x| <= r} e^{<v,x>} dx, any n >= 1 (radial reduction).
double char_ball_integral(const EuclidGroup& G, double r);

/// Applies M(D_X): multiply by chi^{1/2}, act by the radial Fourier
/// multiplier M(|xi|), multiply by chi^{-1/2}. Throws UnstableConjugation
/// when chi^{1/2} g exceeds the dynamic-range guard.
Field apply_multiplier(const GridFunction& M, const Field& g, const EuclidGroup& G,
                       double conjugation_guard = 1e12);

/// Surface measure of S^{n-1}.
double sphere_measure(int n);

}  // namespace stripcalc
