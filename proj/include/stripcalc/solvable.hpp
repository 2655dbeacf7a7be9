#pragma once

#include <string>

#include "stripcalc/grid.hpp"

namespace stripcalc {

/// Rank-one solvable extension N x| A, described by the homogeneous dimension
/// Q of N and the drift parameter alpha of the character e^{alpha u}.
struct SolvableGroup {
  int Q = 2;
  double alpha = 1.0;

  static SolvableGroup make(int Q, double alpha);
  double b_X() const { return 0.5 * std::abs(alpha); }
};

/// Growth regime of the character-ball integrals; varpi is the polynomial
/// correction exponent (1, 1/2, 0).
enum class DriftRegime { Above, Critical, Below };  // alpha >, =, < -Q/2

struct CharacterInfo {
  double alpha = 0.0;
  double b_X = 0.0;
  DriftRegime regime = DriftRegime::Above;
  double varpi = 1.0;
  bool left_haar = false;  // alpha == -Q: mu_X is a left Haar measure
  std::string description;
};

/// Classifies the character e^{alpha u}; throws ZeroDrift for alpha = 0.
CharacterInfo classify_character(double alpha, int Q);

/// Plancherel weight lambda^{[3, Q+1]} (lambda^3 below 1, lambda^{Q+1} above).
double plancherel_weight(double lambda, int Q);

/// Quadrature of \int_0^inf |F(lambda)|^2 lambda^{[3,Q+1]} dlambda / lambda.
/// Throws QuadratureDivergence when F does not decay on its grid.
double plancherel_weight_norm(const GridFunction& F, int Q);

struct SolvableBallIntegral {
  double r = 0.0;
  double log_unweighted = 0.0;  // log \int_B chi_alpha dmu (reduced form)
  double log_weighted = 0.0;    // same with the (1+s^{Q/2})^{-1} inner weight
  double log_value = 0.0;       // the regime-relevant of the two
  double mantissa = 0.0;        // value = mantissa * 10^exp10
  int exp10 = 0;
  double normalized_ratio = 0.0;  // value / (r^varpi-type normalizer * e^{|alpha| r})
  DriftRegime regime = DriftRegime::Above;
  double varpi = 1.0;
};

/// Character-ball integral
///   \int_{-r}^{r} e^{alpha u} \int_0^{e^u (cosh r - cosh u)} s^{Q/2-1} ds du
/// (inner integral in closed form, outer in the log domain). The weighted
/// variant caps the inner integrand by 1/(1+s^{Q/2}); the regime of alpha
/// selects which of the two the growth estimate refers to. Requires
/// r in [1, 30].
SolvableBallIntegral char_ball_integral_solvable(const SolvableGroup& G, double r);

}  // namespace stripcalc
