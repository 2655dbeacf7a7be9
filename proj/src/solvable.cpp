#include "stripcalc/solvable.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "stripcalc/quadrature.hpp"

namespace stripcalc {

SolvableGroup SolvableGroup::make(int Q, double alpha) {
  if (Q < 1) throw DomainViolation("homogeneous dimension Q must be >= 1");
  if (alpha == 0.0) throw ZeroDrift("nontrivial character requires alpha != 0");
  return SolvableGroup{Q, alpha};
}

CharacterInfo classify_character(double alpha, int Q) {
  if (alpha == 0.0) throw ZeroDrift("nontrivial character requires alpha != 0");
  CharacterInfo info;
  info.alpha = alpha;
  info.b_X = 0.5 * std::abs(alpha);
  const double crit = -0.5 * static_cast<double>(Q);
  const double tol = 1e-12 * std::max(1.0, std::abs(alpha));
  if (std::abs(alpha - crit) <= tol) {
    info.regime = DriftRegime::Critical;
    info.varpi = 0.5;
  } else if (alpha > crit) {
    info.regime = DriftRegime::Above;
    info.varpi = 1.0;
  } else {
    info.regime = DriftRegime::Below;
    info.varpi = 0.0;
  }
  info.left_haar = std::abs(alpha + static_cast<double>(Q)) <= tol;
  info.description = "chi(z,u) = exp(" + std::to_string(alpha) + " u), b_X = " +
                     std::to_string(info.b_X) +
                     (info.left_haar ? " [intrinsic hypoelliptic Laplacian: mu_X is left Haar]"
                                     : "");
  return info;
}

double plancherel_weight(double lambda, int Q) {
  if (lambda <= 0.0) return 0.0;
  return lambda <= 1.0 ? std::pow(lambda, 3)
                       : std::pow(lambda, static_cast<double>(Q) + 1.0);
}

double plancherel_weight_norm(const GridFunction& F, int Q) {
  if (F.max_abs() == 0.0) return 0.0;
  if (!boundary_decay_ok(F, 1e-8))
    throw QuadratureDivergence("plancherel weight integral needs a decaying F");
  const double Lambda = F.grid.half_width;
  auto integrand = [&F, Q](double l) {
    return std::norm(F.at(l)) * plancherel_weight(l, Q) / l;
  };
  // Split at the weight's kink.
  return adaptive_quadrature(integrand, 0.0, 1.0, 1e-12) +
         adaptive_quadrature(integrand, 1.0, Lambda, 1e-12);
}

namespace {

double log_sinh(double x) { return std::log(std::sinh(x)); }

// log(cosh r - cosh u) via the product form, stable for u near +-r.
double log_cosh_gap(double r, double u) {
  const double p = 0.5 * (r + u);
  const double q = 0.5 * (r - u);
  if (p <= 0.0 || q <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(2.0) + log_sinh(p) + log_sinh(q);
}

double log1pexp(double y) {
  return std::max(y, 0.0) + std::log1p(std::exp(-std::abs(y)));
}

// log \int_{-r}^{r} e^{A(u)} du with the endpoint substitution u = +-(r - w^2);
// the exponent A may diverge to -inf at the endpoints.
double log_integral(const std::function<double(double)>& A, double r) {
  const double wmax = std::sqrt(r);
  // Scan for the exponent peak first, then integrate the shifted integrand.
  double peak = -std::numeric_limits<double>::infinity();
  const int scan = 2048;
  for (int i = 1; i < scan; ++i) {
    const double u = -r + 2.0 * r * static_cast<double>(i) / scan;
    peak = std::max(peak, A(u));
  }
  auto half = [&](double side) {
    return adaptive_quadrature(
        [&](double w) {
          const double u = side * (r - w * w);
          const double a = A(u);
          return std::isfinite(a) ? 2.0 * w * std::exp(a - peak) : 0.0;
        },
        0.0, wmax, 1e-13 * wmax, 30);
  };
  const double total = half(1.0) + half(-1.0);
  if (!(total > 0.0) || !std::isfinite(peak))
    throw Overflow("ball integral could not be evaluated in range");
  return peak + std::log(total);
}

}  // namespace

SolvableBallIntegral char_ball_integral_solvable(const SolvableGroup& G, double r) {
  if (r < 1.0) throw BadRadius("ball integral requires r >= 1");
  if (r > 30.0) throw Overflow("ball integral limited to r <= 30");
  const double Q = static_cast<double>(G.Q);
  const double alpha = G.alpha;

  // Unweighted: (2/Q) \int e^{(alpha + Q/2) u} (cosh r - cosh u)^{Q/2} du.
  auto A_plain = [=](double u) {
    return (alpha + 0.5 * Q) * u + 0.5 * Q * log_cosh_gap(r, u);
  };
  // Weighted: (2/Q) \int e^{alpha u} log(1 + X^{Q/2}) du, X = e^u (cosh r - cosh u).
  auto A_weighted = [=](double u) {
    const double y = 0.5 * Q * (u + log_cosh_gap(r, u));
    return alpha * u + std::log(log1pexp(y));
  };

  SolvableBallIntegral out;
  out.r = r;
  out.log_unweighted = std::log(2.0 / Q) + log_integral(A_plain, r);
  out.log_weighted = std::log(2.0 / Q) + log_integral(A_weighted, r);

  const CharacterInfo info = classify_character(alpha, G.Q);
  out.regime = info.regime;
  out.varpi = info.varpi;
  out.log_value = info.regime == DriftRegime::Above ? out.log_weighted : out.log_unweighted;

  const double log10v = out.log_value / std::log(10.0);
  out.exp10 = static_cast<int>(std::floor(log10v));
  out.mantissa = std::pow(10.0, log10v - out.exp10);

  double log_normalizer = std::abs(alpha) * r;
  switch (info.regime) {
    case DriftRegime::Above:
      log_normalizer += std::log1p(r);
      break;
    case DriftRegime::Critical:
      log_normalizer += std::log(r);
      break;
    case DriftRegime::Below:
      break;
  }
  out.normalized_ratio = std::exp(out.log_value - log_normalizer);
  return out;
}

}  // namespace stripcalc
