#pragma once

#include "stripcalc/grid.hpp"

namespace stripcalc {

/// Smooth dyadic cutoff psi >= 0 on (0, infinity): supported in [1/4, 4] and
/// normalized so that sum_{j in Z} psi(2^j lambda) = 1 for every lambda > 0.
/// The normalization is exact by construction (a fixed bump divided by its
/// own dyadic sum), so the partition identity holds to rounding.
class DyadicCutoff {
 public:
  /// Two distinct bump profiles; norms built from either are equivalent, and
  /// the test suite checks the ratio stays stable.
  enum class Profile { Standard, Alternate };

  explicit DyadicCutoff(Profile profile = Profile::Standard) : profile_(profile) {}

  double operator()(double lambda) const;

  /// sum_j psi(2^j lambda), evaluated over the finitely many nonzero terms.
  double partition_sum(double lambda) const;

  /// psi_(0)(lambda) = sum_{eps = +-1, j >= 0} psi(eps 2^j lambda):
  /// an even plateau, 1 on [-1/4, 1/4], supported in [-4, 4].
  double plateau(double lambda) const;

  /// psi_(k) for k > 0: psi(lambda) + psi(-lambda).
  double pair(double lambda) const;

  Profile profile() const { return profile_; }

 private:
  double bump(double lambda) const;
  Profile profile_;
};

/// The unit-translate cutoff family: omega is even, smooth, supported in
/// [-1, 1] (in fact [-3/4, 3/4]), identically 1 on [-1/4, 1/4], and
/// sum_{h in Z} omega(t - h) = 1. Derived members:
///   omega_h(t) = omega(t-h+1) + omega(t+h-1), h >= 2, supported in
///                [h-2, h] U [-h, -h+2];
///   eta^ = omega + omega_2, a plateau equal to 1 on [-1, 1], 0 outside
///          [-2, 2].
class CutoffFamily {
 public:
  double omega(double t) const;
  double omega_h(double t, int h) const;
  double eta_hat(double t) const;
};

}  // namespace stripcalc
