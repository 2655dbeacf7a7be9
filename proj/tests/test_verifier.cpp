#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stripcalc/verifier.hpp"

using namespace stripcalc;

TEST_CASE("smoothness thresholds: polynomial-growth variant") {
  auto poly = [](double n, double delta, double p) {
    PolyThreshold t;
    t.d0 = t.d_inf = n;
    t.delta = delta;
    return smoothness_threshold(p, t).s_min;
  };
  CHECK(poly(1, 1, 1.0) == doctest::Approx(1.0));         // |1/p-1/2| (n+1)
  CHECK(poly(3, 1, 1.0) == doctest::Approx(2.0));
  CHECK(poly(3, 1, 4.0 / 3.0) == doctest::Approx(1.0));
  CHECK(poly(3, 1, 4.0) == doctest::Approx(1.0));         // dual exponent
  CHECK(poly(2, 0.5, 1.0) == doctest::Approx(0.5 * 3.5)); // max{2, 2-1/2+2}
}

TEST_CASE("smoothness thresholds: solvable variant, six-case grid") {
  auto na = [](int Q, double alpha, double p) {
    return smoothness_threshold(p, SolvableThreshold{Q, alpha}).s_min;
  };
  CHECK(na(3, -4.0, 1.0) == doctest::Approx(2.0));   // max{4, 2}/2
  CHECK(na(2, 1.0, 1.0) == doctest::Approx(2.0));    // max{3, 4}/2
  CHECK(na(2, -1.0, 1.0) == doctest::Approx(1.5));   // sgn = 0
  CHECK(na(2, -2.0, 1.0) == doctest::Approx(1.5));   // max{3, 2}/2
  CHECK(na(1, 0.5, 4.0 / 3.0) == doctest::Approx(1.0));  // max{2, 4}/4
  CHECK(na(4, -1.0, std::numeric_limits<double>::infinity()) == doctest::Approx(2.5));
}

TEST_CASE("smoothness thresholds: general variant and derived exponents") {
  AssumptionParams params;
  params.beta = 2.0;
  params.sigma = 1.5;
  params.varpi = 0.0;
  params.gamma = 0.6;
  params.W = 1.0;
  ThresholdResult r = smoothness_threshold(4.0 / 3.0, GeneralThreshold{params});
  CHECK(r.s_min == doctest::Approx(2.0 * 0.25 * 1.5));
  CHECK(r.q == doctest::Approx(4.0));   // 1/q = |2/p-1|/beta = 1/4
  CHECK(r.strip_width == doctest::Approx(0.5));
}

TEST_CASE("smoothness thresholds: error and symmetry properties") {
  CHECK_THROWS_AS(smoothness_threshold(2.0, SolvableThreshold{2, 1.0}), BadExponent);
  CHECK_THROWS_AS(smoothness_threshold(0.5, SolvableThreshold{2, 1.0}), BadExponent);
  // Duality p <-> p' and monotone decrease toward p = 2.
  auto s = [](double p) {
    PolyThreshold t;
    t.d0 = t.d_inf = 3;
    return smoothness_threshold(p, t).s_min;
  };
  for (double p : {1.2, 1.5, 1.8}) {
    const double pdual = p / (p - 1.0);
    CHECK(s(p) == doctest::Approx(s(pdual)).epsilon(1e-12));
  }
  CHECK(s(1.2) >= s(1.5));
  CHECK(s(1.5) >= s(1.8));
}

TEST_CASE("parabola map: strip width, boundary image, domain guard") {
  const GridSpec grid = GridSpec::make(16.0, 1.0 / 64);
  MultiplierSpec M;
  M.family = MultiplierSpec::Family::Gaussian;
  M.heat_time = 0.3;
  M.b = 1.0;

  // p = 1: W = |X|/2 = b_X.
  ParabolaTraces t1 = parabola_map(M, 1.0, 2.0, grid);
  CHECK(t1.W == doctest::Approx(1.0));
  CHECK(t1.b_X == doctest::Approx(1.0));
  CHECK(t1.boundary_defect < 1e-12);

  // Trace values match the closed form of the family.
  ParabolaTraces t = parabola_map(M, 1.5, 2.0, grid);
  CHECK(t.W == doctest::Approx(2.0 / 6.0));
  for (double x : {0.0, 0.5, 2.0}) {
    const Complex z(x, t.W);
    const Complex expect = std::exp(-0.3 * (Complex(1.0, 0.0) + z * z));
    CHECK(std::abs(t.upper.at(x) - expect) < 1e-12);
  }
  CHECK(t.boundary_defect < 1e-12);

  // Requested strip beyond the declared validity is rejected.
  MultiplierSpec narrow;
  narrow.family = MultiplierSpec::Family::ResolventPower;
  narrow.b = 0.25;
  CHECK_THROWS_AS(parabola_map(narrow, 1.0, 2.0, grid), DomainViolation);
  CHECK_THROWS_AS(parabola_map(M, 2.0, 2.0, grid), BadExponent);
}

TEST_CASE("assumption harness: finite constants, zero member, support guard") {
  DyadicCutoff psi;
  CutoffFamily cut;
  EuclidGroup G = EuclidGroup::line(2.0);
  AssumptionParams params;
  params.sigma = 1.5;
  params.gamma = 0.6;
  params.W = 1.0;

  const GridSpec grid = GridSpec::make(64.0, 1.0 / 64);
  auto local = dyadic_local_suite(grid, psi, cut, 0, 3);

  VerificationReport a = verify_assumption(WhichAssumption::A, G, local, params, psi);
  CHECK(a.suite_constant > 0.0);
  CHECK(std::isfinite(a.suite_constant));
  CHECK(a.cases.size() == 4);

  VerificationReport b = verify_assumption(WhichAssumption::B, G, local, params, psi);
  CHECK(b.suite_constant > 0.0);

  // Zero member contributes zero constants.
  std::vector<SuiteMember> zero_suite;
  zero_suite.push_back(
      {"zero", sample_real(grid, [](double) { return 0.0; }, Parity::Even), 0});
  VerificationReport z = verify_assumption(WhichAssumption::A, G, zero_suite, params, psi);
  CHECK(z.suite_constant == 0.0);

  // A member with frequency content outside [-2, 2] violates the premise.
  std::vector<SuiteMember> bad;
  bad.push_back({"wide",
                 sample_real(grid, [](double l) { return std::exp(-l * l / 9.0) * std::cos(4.0 * l); },
                             Parity::Even),
                 0});
  CHECK_THROWS_AS(verify_assumption(WhichAssumption::A, G, bad, params, psi),
                  SupportViolation);
  CHECK_THROWS_AS(verify_assumption(WhichAssumption::C, G, local, params, psi),
                  SupportViolation);  // band index missing
}

TEST_CASE("assumption C: per-band constants are flat") {
  DyadicCutoff psi;
  EuclidGroup G = EuclidGroup::line(2.0);
  AssumptionParams params;
  params.sigma = 1.5;
  params.varpi = 0.0;
  params.gamma = 0.6;
  params.W = 1.0;  // = b_X
  const GridSpec grid = GridSpec::make(64.0, 1.0 / 64);
  VerificationReport c =
      verify_assumption(WhichAssumption::C, G, band_suite(grid, 3, 10), params, psi);
  double lo = 1e300, hi = 0.0;
  for (const auto& cs : c.cases) {
    lo = std::min(lo, cs.constant);
    hi = std::max(hi, cs.constant);
  }
  CHECK(hi / lo < 3.0);
}

TEST_CASE("assumption stability driver") {
  DyadicCutoff psi;
  CutoffFamily cut;
  EuclidGroup G = EuclidGroup::line(2.0);
  AssumptionParams params;
  params.sigma = 1.5;
  params.gamma = 0.6;
  params.W = 1.0;
  StabilityStudy st = assumption_stability(WhichAssumption::B, G, params, psi, cut,
                                           GridSpec::make(64.0, 1.0 / 64));
  CHECK(st.stable(2.0));
  CHECK(st.base.verdict == "stable");
  CHECK(st.refine_ratio < 1.1);
  CHECK(st.double_ratio < 1.1);
}

TEST_CASE("atoms: hand values, invariants, guards") {
  const GridSpec grid = GridSpec::make(8.0, 1.0 / 256);
  EuclidGroup G0 = EuclidGroup::line(0.0);

  // Lebesgue case on B = [-1, 1]: two-level profile +-1/2, norm 1/sqrt(2).
  Atom a = make_atom(AtomKind::Standard, 0.0, 1.0, G0, grid);
  double plus = 0.0, minus = 0.0;
  for (Index i = 0; i < a.values.cells(); ++i) {
    const double x = a.values.coords(i)[0];
    if (x > 0.02 && x < 0.98) plus = a.values.values[i].real();
    if (x < -0.02 && x > -0.98) minus = a.values.values[i].real();
  }
  CHECK(plus == doctest::Approx(0.5).epsilon(0.01));
  CHECK(minus == doctest::Approx(-0.5).epsilon(0.01));

  auto discrete_l2_muX = [&](const Atom& atom, const EuclidGroup& G) {
    double s = 0.0;
    for (Index i = 0; i < atom.values.cells(); ++i) {
      const double x = atom.values.coords(i)[0];
      const double chi = G.drift.size() ? std::exp(G.drift[0] * x) : 1.0;
      s += std::norm(atom.values.values[i]) * chi * grid.step;
    }
    return std::sqrt(s);
  };
  auto discrete_mean_muX = [&](const Atom& atom, const EuclidGroup& G) {
    double s = 0.0;
    for (Index i = 0; i < atom.values.cells(); ++i) {
      const double x = atom.values.coords(i)[0];
      const double chi = G.drift.size() ? std::exp(G.drift[0] * x) : 1.0;
      s += atom.values.values[i].real() * chi * grid.step;
    }
    return s;
  };
  auto ball_mass = [&](const Atom& atom, const EuclidGroup& G) {
    double s = 0.0;
    for (Index i = 0; i < atom.values.cells(); ++i) {
      const double x = atom.values.coords(i)[0];
      if (std::abs(x - atom.center) > atom.radius) continue;
      s += (G.drift.size() ? std::exp(G.drift[0] * x) : 1.0) * grid.step;
    }
    return s;
  };

  EuclidGroup G = EuclidGroup::line(2.0);
  for (double center : {-1.5, 0.0, 2.0}) {
    for (double radius : {0.25, 0.5, 1.0}) {
      Atom st = make_atom(AtomKind::Standard, center, radius, G, grid);
      CHECK(std::abs(discrete_mean_muX(st, G)) < 1e-10);
      CHECK(discrete_l2_muX(st, G) ==
            doctest::Approx(1.0 / std::sqrt(ball_mass(st, G))).epsilon(1e-12));
      Atom gl = make_atom(AtomKind::Global, center, radius, G, grid);
      CHECK(discrete_l2_muX(gl, G) ==
            doctest::Approx(1.0 / std::sqrt(ball_mass(gl, G))).epsilon(1e-12));
      // Global atoms carry unconstrained means.
      CHECK(std::abs(discrete_mean_muX(gl, G)) > 1e-6);
    }
  }

  CHECK_THROWS_AS(make_atom(AtomKind::Standard, 0.0, 1.5, G, grid), BadRadius);
  CHECK_THROWS_AS(make_atom(AtomKind::Standard, 7.8, 1.0, G, grid), BadRadius);
  CHECK_THROWS_AS(make_atom(AtomKind::Standard, 0.0, 1e-4, G, grid), BadRadius);
}

TEST_CASE("atomwise L1 bound: identity multiplier stays below one") {
  EuclidGroup G = EuclidGroup::line(2.0);
  const GridSpec grid = GridSpec::make(16.0, 1.0 / 64);
  CutoffFamily cut;
  std::vector<Atom> atoms;
  for (double c : {-2.0, 0.0, 1.0})
    for (double r : {0.5, 1.0}) atoms.push_back(make_atom(AtomKind::Standard, c, r, G, grid));

  MultiplierSpec identity;
  identity.family = MultiplierSpec::Family::Gaussian;
  identity.heat_time = 0.0;  // e^0 = 1
  H1BoundReport rep = h1_atomwise_bound(identity, G, atoms, cut, GridSpec::make(64.0, 1.0 / 64));
  CHECK(rep.suite_sup <= 1.0 + 1e-8);
  for (double v : rep.per_atom) CHECK(v <= 1.0 + 1e-8);
}

TEST_CASE("atomwise bound: local-part constants for an imaginary power") {
  EuclidGroup G = EuclidGroup::line(2.0);
  const GridSpec grid = GridSpec::make(16.0, 1.0 / 64);
  CutoffFamily cut;
  std::vector<Atom> atoms;
  for (double c : {-1.0, 0.0, 1.5}) atoms.push_back(make_atom(AtomKind::Standard, c, 1.0, G, grid));

  MultiplierSpec M1;
  M1.family = MultiplierSpec::Family::ImaginaryPower;
  M1.gamma_tilde = 1.0;
  M1.b = 1.0;
  H1BoundReport r1 = h1_atomwise_bound(M1, G, atoms, cut, GridSpec::make(64.0, 1.0 / 64));
  CHECK(std::isfinite(r1.suite_sup));
  CHECK(r1.suite_sup > 0.0);
  CHECK(r1.N1 > 0.0);
  CHECK(r1.N2 < 1e-4);  // local kernel lives in [-2, 2]

  MultiplierSpec M2 = M1;
  M2.gamma_tilde = 2.0;
  H1BoundReport r2 = h1_atomwise_bound(M2, G, atoms, cut, GridSpec::make(64.0, 1.0 / 64));
  CHECK(r2.suite_sup > r1.suite_sup);
}

TEST_CASE("bmo norm: constants, zero, and the sign function") {
  EuclidGroup G0 = EuclidGroup::line(0.0);
  const GridSpec grid = GridSpec::make(8.0, 1.0 / 128);
  Field zero = zero_field(1, grid);
  CHECK(bmo_norm(zero, G0) == 0.0);

  Field one = zero_field(1, grid);
  one.values.setConstant(1.0);
  CHECK(bmo_norm(one, G0) == doctest::Approx(1.0).epsilon(1e-12));

  Field sgn = zero_field(1, grid);
  for (Index i = 0; i < sgn.cells(); ++i) {
    const double x = grid.point(i);
    sgn.values[i] = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
  }
  const double coarse = bmo_norm(sgn, G0);
  BmoOptions dense;
  dense.center_stride = 1;
  dense.radii = 12;
  const double fine = bmo_norm(sgn, G0, dense);
  // Oscillation term is maximized by balls centered at the jump (value 1);
  // the unit-ball term adds 1. The coarse net may only miss a grid-step's
  // worth of the sup.
  CHECK(fine == doctest::Approx(2.0).epsilon(0.01));
  CHECK(coarse <= fine + 1e-12);
  CHECK(fine - coarse < 0.02);
}

TEST_CASE("operator norms: identity, spectral bound at p = 2") {
  EuclidGroup G = EuclidGroup::line(1.0);
  const GridSpec grid = GridSpec::make(16.0, 1.0 / 64);
  MultiplierSpec identity;
  identity.family = MultiplierSpec::Family::Gaussian;
  identity.heat_time = 0.0;
  OperatorNormOptions opts;
  opts.trials = 8;
  OperatorNormResult r = empirical_operator_norm(identity, 1.5, G, grid, opts);
  CHECK(r.estimate == doctest::Approx(1.0).epsilon(1e-10));

  // |M_X| = 1 on the line for imaginary powers: p = 2 estimates stay below 1.
  MultiplierSpec imag;
  imag.family = MultiplierSpec::Family::ImaginaryPower;
  imag.gamma_tilde = 3.0;
  imag.b = 0.5;
  OperatorNormResult r2 = empirical_operator_norm(imag, 2.0, G, grid, opts);
  CHECK(r2.estimate <= 1.0 + 1e-8);
}

TEST_CASE("operator norm scaling dichotomy (reduced levels)") {
  EuclidGroup G = EuclidGroup::line(1.0);
  OperatorNormOptions opts;
  opts.trials = 8;
  MultiplierSpec stable;
  stable.family = MultiplierSpec::Family::ResolventPower;
  stable.power = 1.0;
  stable.b = 0.5;  // holomorphic far beyond W_{X,3/2} = 1/6
  ScalingStudy st =
      operator_norm_scaling_study(stable, 1.5, G, GridSpec::make(16.0, 1.0 / 64), 2, opts);
  CHECK(st.total_drift < 0.10);

  MultiplierSpec blowup;
  blowup.family = MultiplierSpec::Family::ImaginaryPower;
  blowup.gamma_tilde = 4.0;
  blowup.b = 0.04;  // validity strip far narrower than required
  ScalingStudy bu =
      operator_norm_scaling_study(blowup, 1.5, G, GridSpec::make(8.0, 1.0 / 64), 2, opts);
  CHECK(bu.min_growth >= 1.2);
}

TEST_CASE("local/global split is consistent under the operator") {
  EuclidGroup G = EuclidGroup::line(2.0);
  CutoffFamily cut;
  const GridSpec sgrid = GridSpec::make(64.0, 1.0 / 64);
  MultiplierSpec M;
  M.family = MultiplierSpec::Family::ResolventPower;
  M.power = 1.0;
  M.b = 1.0;
  GridFunction M_real = M.trace(sgrid, 0.0);
  GridFunction M_samples = M_real;
  M_samples.evaluator = nullptr;
  SplitResult split = local_global_split(M_samples, cut);

  const GridSpec axis = GridSpec::make(16.0, 1.0 / 64);
  Field g = zero_field(1, axis);
  for (Index i = 0; i < g.cells(); ++i) {
    const double x = axis.point(i);
    g.values[i] = std::exp(-2.0 * x * x) * std::cos(3.0 * x);
  }
  Field full = apply_multiplier(M_samples, g, G);
  Field loc = apply_multiplier(split.local_part, g, G);
  Field glob = apply_multiplier(split.global_part, g, G);
  const double err = (full.values - loc.values - glob.values).abs().maxCoeff();
  CHECK(err < 1e-8 * std::max(1.0, full.max_abs()));
}
