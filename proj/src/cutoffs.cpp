#include "stripcalc/cutoffs.hpp"

#include <cmath>

namespace stripcalc {

namespace {

// exp(-1/s) extended by 0; the standard C^inf transition ingredient.
double e0(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// theta(s) + theta(1-s) = 1 exactly (same denominator), theta = 0 for s <= 0,
// theta = 1 for s >= 1.
double smoothstep(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = e0(s);
  const double b = e0(1.0 - s);
  return a / (a + b);
}

}  // namespace

double DyadicCutoff::bump(double lambda) const {
  if (!(lambda > 0.0)) return 0.0;
  const double u = std::log2(lambda) / 2.0;  // supp in u: (-1, 1) <=> lambda in (1/4, 4)
  if (std::abs(u) >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  switch (profile_) {
    case Profile::Standard:
      return std::exp(-1.0 / w);
    case Profile::Alternate:
      return std::exp(-1.0 / (w * w));
  }
  return 0.0;
}

double DyadicCutoff::operator()(double lambda) const {
  if (!(lambda > 0.0)) return 0.0;
  const double b = bump(lambda);
  if (b == 0.0) return 0.0;
  // Dyadic sum: only j with 2^j lambda in (1/4, 4) contribute.
  double s = 0.0;
  const double l2 = std::log2(lambda);
  const int j_lo = static_cast<int>(std::ceil(-2.0 - l2));
  const int j_hi = static_cast<int>(std::floor(2.0 - l2));
  for (int j = j_lo; j <= j_hi; ++j) s += bump(std::ldexp(lambda, j));
  return b / s;
}

double DyadicCutoff::partition_sum(double lambda) const {
  if (!(lambda > 0.0)) return 0.0;
  double s = 0.0;
  const double l2 = std::log2(lambda);
  const int j_lo = static_cast<int>(std::ceil(-2.0 - l2));
  const int j_hi = static_cast<int>(std::floor(2.0 - l2));
  for (int j = j_lo; j <= j_hi; ++j) s += (*this)(std::ldexp(lambda, j));
  return s;
}

double DyadicCutoff::plateau(double lambda) const {
  const double a = std::abs(lambda);
  if (a == 0.0) return 1.0;
  if (a <= 0.25) return 1.0;
  if (a >= 4.0) return 0.0;
  double s = 0.0;
  for (int j = 0; std::ldexp(a, j) < 4.0; ++j) s += (*this)(std::ldexp(a, j));
  return s;
}

double DyadicCutoff::pair(double lambda) const {
  return (*this)(lambda) + (*this)(-lambda);
}

double CutoffFamily::omega(double t) const {
  const double a = std::abs(t);
  if (a <= 0.25) return 1.0;
  if (a >= 0.75) return 0.0;
  // Transition on [1/4, 3/4]; omega(t) + omega(1 - t) = 1 there.
  return smoothstep(2.0 * (0.75 - a));
}

double CutoffFamily::omega_h(double t, int h) const {
  if (h < 2) throw BadBandIndex("omega_h requires h >= 2");
  const double shift = static_cast<double>(h - 1);
  return omega(t - shift) + omega(t + shift);
}

double CutoffFamily::eta_hat(double t) const {
  return omega(t) + omega(t - 1.0) + omega(t + 1.0);
}

}  // namespace stripcalc
