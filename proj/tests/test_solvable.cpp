#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stripcalc/paley_wiener.hpp"
#include "stripcalc/solvable.hpp"

using namespace stripcalc;

TEST_CASE("plancherel weight: continuity at 1 and small-lambda power") {
  CHECK(plancherel_weight(1.0, 1) == doctest::Approx(1.0));
  CHECK(plancherel_weight(1.0 - 1e-9, 4) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(plancherel_weight(1.0 + 1e-9, 4) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(plancherel_weight(0.5, 3) == doctest::Approx(0.125));
  CHECK(plancherel_weight(2.0, 3) == doctest::Approx(16.0));
  CHECK(plancherel_weight(0.0, 2) == 0.0);
}

TEST_CASE("plancherel weight integral: zero, oracle value, monotonicity") {
  const GridSpec grid = GridSpec::make(24.0, 1.0 / 64);
  GridFunction z = sample_real(grid, [](double) { return 0.0; }, Parity::Even);
  CHECK(plancherel_weight_norm(z, 2) == 0.0);

  GridFunction F =
      sample_real(grid, [](double l) { return std::exp(-std::abs(l)); }, Parity::Even);
  const double impl = plancherel_weight_norm(F, 3);
  const double expect =
      oracle::integrate([](double l) { return std::exp(-2.0 * l) * l * l; }, 0.0, 1.0,
                        1e-13) +
      oracle::integrate([](double l) { return std::exp(-2.0 * l) * l * l * l; }, 1.0, 24.0,
                        1e-13);
  CHECK(impl == doctest::Approx(expect).epsilon(1e-8));

  GridFunction F2 = sample_real(
      grid, [](double l) { return 2.0 * std::exp(-std::abs(l)); }, Parity::Even);
  CHECK(plancherel_weight_norm(F2, 3) == doctest::Approx(4.0 * impl).epsilon(1e-12));
  CHECK(plancherel_weight_norm(F, 3) <= plancherel_weight_norm(F2, 3));
}

TEST_CASE("character classification") {
  CHECK_THROWS_AS(classify_character(0.0, 2), ZeroDrift);

  CharacterInfo crit = classify_character(-1.0, 2);
  CHECK(crit.regime == DriftRegime::Critical);
  CHECK(crit.varpi == doctest::Approx(0.5));
  CHECK(crit.b_X == doctest::Approx(0.5));
  CHECK(!crit.left_haar);

  CharacterInfo haar = classify_character(-2.0, 2);
  CHECK(haar.left_haar);
  CHECK(haar.regime == DriftRegime::Below);
  CHECK(haar.varpi == doctest::Approx(0.0));

  CharacterInfo above = classify_character(1.0, 2);
  CHECK(above.regime == DriftRegime::Above);
  CHECK(above.varpi == doctest::Approx(1.0));

  CharacterInfo q3 = classify_character(-4.0, 3);
  CHECK(q3.regime == DriftRegime::Below);
}

TEST_CASE("ball integral closed forms at Q = 2") {
  // alpha = -Q/2 = -1: I = 2 (r cosh r - sinh r).
  SolvableGroup crit = SolvableGroup::make(2, -1.0);
  for (double r : {4.0, 8.0, 12.0, 16.0}) {
    SolvableBallIntegral I = char_ball_integral_solvable(crit, r);
    const double expect = std::log(2.0 * (r * std::cosh(r) - std::sinh(r)));
    CHECK(I.log_unweighted == doctest::Approx(expect).epsilon(1e-9));
    CHECK(I.log_value == I.log_unweighted);
    CHECK(I.regime == DriftRegime::Critical);
  }
  // alpha = -2 < -Q/2: I = sinh(2r)/2 - r.
  SolvableGroup below = SolvableGroup::make(2, -2.0);
  for (double r : {4.0, 8.0, 12.0}) {
    SolvableBallIntegral I = char_ball_integral_solvable(below, r);
    const double expect = std::log(0.5 * std::sinh(2.0 * r) - r);
    CHECK(I.log_unweighted == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("weighted ball integral against direct quadrature") {
  SolvableGroup above = SolvableGroup::make(2, 1.0);
  for (double r : {4.0, 8.0}) {
    SolvableBallIntegral I = char_ball_integral_solvable(above, r);
    const double expect = oracle::integrate(
        [r](double u) {
          const double X = std::exp(u) * (std::cosh(r) - std::cosh(u));
          return std::exp(u) * std::log1p(std::max(0.0, X));
        },
        -r, r, 1e-9 * std::exp(r), 0.25);
    CHECK(I.log_weighted == doctest::Approx(std::log(expect)).epsilon(1e-7));
    CHECK(I.log_value == I.log_weighted);
    CHECK(I.regime == DriftRegime::Above);
  }
}

TEST_CASE("three growth regimes: normalized ratios bounded over the sweep") {
  struct Case {
    int Q;
    double alpha;
    DriftRegime regime;
  };
  for (const Case& c : {Case{2, 1.0, DriftRegime::Above},
                        Case{2, -1.0, DriftRegime::Critical},
                        Case{2, -2.0, DriftRegime::Below}}) {
    SolvableGroup G = SolvableGroup::make(c.Q, c.alpha);
    double lo = 1e300, hi = 0.0;
    for (double r : {4.0, 8.0, 12.0, 16.0}) {
      SolvableBallIntegral I = char_ball_integral_solvable(G, r);
      CHECK(I.regime == c.regime);
      lo = std::min(lo, I.normalized_ratio);
      hi = std::max(hi, I.normalized_ratio);
    }
    CHECK(hi / lo < 10.0);
    CHECK(hi < 1e3);
    CHECK(lo > 1e-3);
  }
}

TEST_CASE("mantissa-exponent representation is consistent") {
  SolvableGroup G = SolvableGroup::make(2, -1.0);
  SolvableBallIntegral I = char_ball_integral_solvable(G, 12.0);
  CHECK(I.mantissa >= 1.0);
  CHECK(I.mantissa < 10.0);
  CHECK(std::log(I.mantissa) + I.exp10 * std::log(10.0) ==
        doctest::Approx(I.log_value).epsilon(1e-12));
}

TEST_CASE("unweighted integral increases in alpha from the critical drift up") {
  // Pairing u <-> -u flips the monotonicity below -Q/2; from the critical
  // value upward the positive-u half dominates and the integral increases.
  const double r = 8.0;
  double prev = -1e300;
  for (double alpha : {-1.0, -0.5, 0.5, 1.0}) {
    SolvableGroup G = SolvableGroup::make(2, alpha);
    const double v = char_ball_integral_solvable(G, r).log_unweighted;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sweep-fit exponential coefficient recovers |alpha| in all regimes") {
  for (double alpha : {1.0, -1.0, -2.0}) {
    SolvableGroup G = SolvableGroup::make(2, alpha);
    std::vector<double> rs = {4.0, 8.0, 12.0, 16.0}, logs;
    for (double r : rs) logs.push_back(char_ball_integral_solvable(G, r).log_value);
    std::vector<std::vector<double>> X;
    std::vector<double> y;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      X.push_back({1.0, rs[i], std::log(rs[i])});
      y.push_back(logs[i]);
    }
    const auto beta = oracle::least_squares(X, y);
    CHECK(beta[1] == doctest::Approx(std::abs(alpha)).epsilon(0.05));
  }
}

TEST_CASE("radius guard rails") {
  SolvableGroup G = SolvableGroup::make(2, -1.0);
  CHECK_THROWS_AS(char_ball_integral_solvable(G, 0.5), BadRadius);
  CHECK_THROWS_AS(char_ball_integral_solvable(G, 31.0), Overflow);
  CHECK_THROWS_AS(SolvableGroup::make(2, 0.0), ZeroDrift);
}
