#include "stripcalc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stripcalc/parallel.hpp"
#include "stripcalc/quadrature.hpp"
#include "stripcalc/solvable.hpp"

namespace stripcalc {

void AssumptionParams::validate() const {
  if (!(beta >= 2.0) || std::isinf(beta))
    throw BadExponent("assumption exponent beta must lie in [2, inf)");
  if (!(sigma > 1.0 / beta))
    throw BadExponent("smoothness sigma must exceed 1/beta");
  if (varpi < 0.0 || gamma < 0.0) throw BadExponent("varpi, gamma must be >= 0");
  if (!(W > 0.0)) throw BadExponent("strip half-width W must be positive");
}

namespace {

double lp_deviation(double p) {
  if (std::isnan(p) || !(p >= 1.0))
    throw BadExponent("p must lie in [1, inf]");
  if (p == 2.0) throw BadExponent("p = 2 is excluded");
  if (std::isinf(p)) return 0.5;
  return std::abs(1.0 / p - 0.5);
}

int sign_with_tol(double x) {
  const double tol = 1e-12 * std::max(1.0, std::abs(x));
  if (std::abs(x) <= tol) return 0;
  return x > 0 ? 1 : -1;
}

}  // namespace

ThresholdResult smoothness_threshold(double p, const ThresholdSpec& spec) {
  const double dev = lp_deviation(p);
  ThresholdResult out;
  if (const auto* g = std::get_if<GeneralThreshold>(&spec)) {
    g->params.validate();
    const double m = std::max({g->params.sigma, g->params.varpi + 1.0,
                               g->params.gamma + 1.0 / g->params.beta});
    out.s_min = 2.0 * dev * m;
    out.q = g->params.beta / (2.0 * dev);
    out.strip_width = 2.0 * dev * g->params.W;
  } else if (const auto* poly = std::get_if<PolyThreshold>(&spec)) {
    const double m = std::max(poly->d0, poly->d_inf - poly->delta + 2.0);
    out.s_min = dev * m;
    out.q = poly->beta / (2.0 * dev);
    out.strip_width = 2.0 * dev * poly->W;
  } else {
    const auto& na = std::get<SolvableThreshold>(spec);
    if (na.alpha == 0.0) throw ZeroDrift("solvable threshold requires alpha != 0");
    const double m = std::max(static_cast<double>(na.Q) + 1.0,
                              3.0 + sign_with_tol(na.alpha + 0.5 * na.Q));
    out.s_min = dev * m;
    out.q = 1.0 / dev;  // beta = 2
    out.strip_width = dev * std::abs(na.alpha);  // 2 dev b_X
  }
  return out;
}

// ---------------------------------------------------------------------------

double MultiplierSpec::validity_half_width() const {
  switch (family) {
    case Family::ImaginaryPower:
    case Family::ResolventPower:
      return b;
    case Family::Gaussian:
      return std::numeric_limits<double>::infinity();
    case Family::Custom:
      return custom_validity;
  }
  return 0.0;
}

Complex MultiplierSpec::eval(Complex z) const {
  const Complex zeta = Complex(b * b, 0.0) + z * z;
  switch (family) {
    case Family::ImaginaryPower:
      return std::exp(Complex(0.0, gamma_tilde) * std::log(zeta));
    case Family::ResolventPower:
      return std::exp(Complex(-power, 0.0) * std::log(zeta));
    case Family::Gaussian:
      return std::exp(-heat_time * zeta);
    case Family::Custom:
      if (z.imag() != 0.0)
        throw DomainViolation("custom multipliers have no off-axis evaluation");
      return custom.at(z.real());
  }
  return {};
}

GridFunction MultiplierSpec::trace(const GridSpec& grid, double y) const {
  if (std::abs(y) >= validity_half_width() && std::abs(y) > 0.0)
    throw DomainViolation("trace line leaves the declared strip of validity");
  MultiplierSpec copy = *this;
  return sample(
      grid, [copy, y](double x) { return copy.eval(Complex(x, y)); },
      y == 0.0 ? Parity::Even : Parity::None);
}

std::string MultiplierSpec::name() const {
  switch (family) {
    case Family::ImaginaryPower:
      return "imaginary_power(gamma=" + std::to_string(gamma_tilde) + ", b=" + std::to_string(b) + ")";
    case Family::ResolventPower:
      return "resolvent_power(u=" + std::to_string(power) + ", b=" + std::to_string(b) + ")";
    case Family::Gaussian:
      return "gaussian(t=" + std::to_string(heat_time) + ", b=" + std::to_string(b) + ")";
    case Family::Custom:
      return "custom";
  }
  return "?";
}

ParabolaTraces parabola_map(const MultiplierSpec& M, double p, double abs_X,
                            const GridSpec& grid) {
  if (!(abs_X > 0.0)) throw DomainViolation("parabola map needs a nonzero drift");
  const double dev = lp_deviation(p);
  ParabolaTraces out;
  out.b_X = 0.5 * abs_X;
  out.W = dev * abs_X;
  const double w_check = std::abs(2.0 / p - 1.0) * out.b_X;
  if (std::abs(out.W - (std::isinf(p) ? out.b_X : w_check)) > 1e-12 * std::max(1.0, out.W))
    throw BadExponent("strip width consistency check failed");
  if (out.W >= M.validity_half_width())
    throw DomainViolation("requested strip exceeds the multiplier's validity");
  out.center = M.trace(grid, 0.0);
  out.upper = M.trace(grid, out.W);
  out.lower = M.trace(grid, -out.W);
  for (const GridFunction* t : {&out.center, &out.upper, &out.lower}) {
    if (!t->values.isFinite().all())
      throw DomainViolation("multiplier is unbounded on the requested strip boundary");
  }

  // Image of the strip boundary against the parabola boundary.
  const double sin_phi = 2.0 * dev;            // |2/p - 1|
  const double cos2 = 1.0 - sin_phi * sin_phi;
  const double b2 = out.b_X * out.b_X;
  double defect = 0.0;
  for (Index i = 0; i < grid.size(); ++i) {
    const double x = grid.point(i);
    const Complex zeta = Complex(b2, 0.0) + Complex(x, out.W) * Complex(x, out.W);
    const double rhs = zeta.imag() * zeta.imag() / (4.0 * b2 * sin_phi * sin_phi) + b2 * cos2;
    defect = std::max(defect, std::abs(zeta.real() - rhs) / (1.0 + std::abs(zeta)));
  }
  out.boundary_defect = defect;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Closed-form spherical average: \int_{S^{n-1}} e^{a <w, rho e_1>} dsigma(w).
double shell_weight(int n, double a_rho) {
  switch (n) {
    case 1:
      return 2.0 * std::cosh(a_rho);
    case 2:
      return 2.0 * kPi * std::cyl_bessel_i(0.0, a_rho);
    case 3:
      return a_rho < 1e-8 ? 4.0 * kPi : 4.0 * kPi * std::sinh(a_rho) / a_rho;
    default:
      throw DomainViolation("character integrals support n in {1, 2, 3}");
  }
}

void check_fourier_support(const GridFunction& F, const SpectralSupport& allowed,
                           const char* who) {
  SpectralObject Fh = forward_transform(F);
  const double peak = Fh.max_abs();
  if (peak == 0.0) return;
  const Index m = F.grid.max_mode();
  for (Index k = -m; k <= m; ++k) {
    const double xi = F.grid.frequency(k);
    if (allowed.contains(xi)) continue;
    if (std::abs(Fh.value_at_mode(k)) >= 1e-8 * peak)
      throw SupportViolation(std::string(who) + ": suite member violates its Fourier-support condition");
  }
}

double assumption_A_lhs(const RadialKernel& K, int n, int y_net) {
  const double h = K.step();
  const double x_max = K.r_max - 1.0;
  double best = 0.0;
  if (n == 1) {
    const Index cells = static_cast<Index>(std::floor(2.0 * x_max / h)) + 1;
    for (int iy = 0; iy < y_net; ++iy) {
      const double y = -1.0 + 2.0 * static_cast<double>(iy) / (y_net - 1);
      if (y == 0.0) continue;
      double acc = 0.0;
      for (Index i = 0; i < cells; ++i) {
        const double x = -x_max + static_cast<double>(i) * h;
        if (std::abs(x) < 2.0 * std::abs(y)) continue;
        acc += std::abs(K.at(std::abs(x + y)) - K.at(std::abs(x))) * h;
      }
      best = std::max(best, acc);
    }
    return best;
  }
  if (n == 2) {
    // Rotational reduction: only |y| matters for a radial kernel.
    const double hc = 2.0 * h;  // coarser 2-D lattice keeps the cost modest
    const Index cells = static_cast<Index>(std::floor(2.0 * x_max / hc)) + 1;
    for (int iy = 0; iy < y_net; ++iy) {
      const double y = -1.0 + 2.0 * static_cast<double>(iy) / (y_net - 1);
      if (y <= 0.0) continue;  // evenness: +-y agree
      double acc = 0.0;
      for (Index i = 0; i < cells; ++i) {
        const double x1 = -x_max + static_cast<double>(i) * hc;
        for (Index j = 0; j < cells; ++j) {
          const double x2 = -x_max + static_cast<double>(j) * hc;
          const double r = std::hypot(x1, x2);
          if (r < 2.0 * y) continue;
          acc += std::abs(K.at(std::hypot(x1 + y, x2)) - K.at(r)) * hc * hc;
        }
      }
      best = std::max(best, acc);
    }
    return best;
  }
  throw DomainViolation("assumption A supports n in {1, 2}");
}

double assumption_B_lhs(const RadialKernel& K, int n, int r_net) {
  const double h = K.step();
  const double surf = sphere_measure(n);
  double best = 0.0;
  for (int i = 0; i < r_net; ++i) {
    const double r = std::pow(2.0, -static_cast<double>(i) / 4.0);  // 1 down to 2^{-8}
    double tail = 0.0;
    for (Index j = 0; j < K.radii.size(); ++j) {
      const double rho = K.radii[j];
      if (rho < r) continue;
      const double w = (j + 1 == K.radii.size()) ? 0.5 : 1.0;
      tail += w * std::abs(K.values[j]) * std::pow(rho, n - 1) * h;
    }
    best = std::max(best, r * surf * tail);
  }
  return best;
}

double assumption_C_lhs(const RadialKernel& K, int n, double half_drift) {
  const double h = K.step();
  double acc = 0.0;
  for (Index j = 0; j < K.radii.size(); ++j) {
    const double rho = K.radii[j];
    const double w = (j == 0 || j + 1 == K.radii.size()) ? 0.5 : 1.0;
    acc += w * std::abs(K.values[j]) * shell_weight(n, half_drift * rho) *
           std::pow(rho, n - 1) * h;
  }
  return acc;
}

}  // namespace

VerificationReport verify_assumption(WhichAssumption which, const EuclidGroup& G,
                                     const std::vector<SuiteMember>& suite,
                                     const AssumptionParams& params,
                                     const DyadicCutoff& psi,
                                     const AssumptionOptions& opts) {
  params.validate();
  if (suite.empty()) throw DomainViolation("assumption suite must be nonempty");
  VerificationReport rep;
  rep.assumption = which == WhichAssumption::A ? "A" : which == WhichAssumption::B ? "B" : "C";
  rep.backend = "euclid(n=" + std::to_string(G.n) + ", |v|=" + std::to_string(G.drift_norm()) + ")";
  rep.params = params;

  for (const SuiteMember& member : suite) {
    const bool banded = which == WhichAssumption::C;
    if (banded && member.band < 3)
      throw SupportViolation("assumption C needs band-supported members (h >= 3)");
    check_fourier_support(member.F,
                          banded ? SpectralSupport::symmetric_pair(member.band - 2, member.band)
                                 : SpectralSupport::interval(-2.0, 2.0),
                          "verify_assumption");

    KernelOptions kopts;
    kopts.points = opts.kernel_points;
    kopts.r_max = banded ? static_cast<double>(member.band) + 1.0 : 4.0;
    kopts.integrand_scale = banded ? static_cast<double>(member.band) : 2.5;
    kopts.decay_tol = opts.kernel_decay_tol;
    const RadialKernel K = kernel_of_multiplier(member.F, G.n, kopts);

    AssumptionCase c;
    c.id = member.id;
    switch (which) {
      case WhichAssumption::A:
        c.lhs = assumption_A_lhs(K, G.n, opts.y_net);
        c.rhs = weighted_sobolev_norm(member.F, params.sigma, -1.0 / params.beta,
                                      params.beta, std::numeric_limits<double>::infinity(), psi);
        break;
      case WhichAssumption::B:
        c.lhs = assumption_B_lhs(K, G.n, opts.r_net);
        c.rhs = weighted_sobolev_norm(member.F, params.sigma, -1.0 / params.beta,
                                      params.beta, std::numeric_limits<double>::infinity(), psi);
        break;
      case WhichAssumption::C: {
        c.lhs = assumption_C_lhs(K, G.n, G.b_X());
        const double g = params.gamma;
        c.rhs = std::exp(params.W * member.band) *
                std::pow(static_cast<double>(member.band), params.varpi) *
                lq_norm_weighted(member.F, params.beta, [g](double x) {
                  return std::pow(1.0 + std::abs(x), g);
                });
        break;
      }
    }
    c.constant = c.rhs > 0.0 ? c.lhs / c.rhs : 0.0;
    rep.suite_constant = std::max(rep.suite_constant, c.constant);
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

StabilityStudy assumption_stability(WhichAssumption which, const EuclidGroup& G,
                                    const AssumptionParams& params,
                                    const DyadicCutoff& psi, const CutoffFamily& cut,
                                    const GridSpec& base_grid,
                                    const AssumptionOptions& opts) {
  auto run = [&](const GridSpec& grid) {
    const auto suite = which == WhichAssumption::C ? band_suite(grid)
                                                   : dyadic_local_suite(grid, psi, cut);
    return verify_assumption(which, G, suite, params, psi, opts);
  };
  StabilityStudy st;
  st.base = run(base_grid);
  st.refined = run(GridSpec{base_grid.half_width, base_grid.step / 2.0});
  st.doubled = run(GridSpec{base_grid.half_width * 2.0, base_grid.step});
  auto ratio = [](double a, double b) {
    if (a <= 0.0 || b <= 0.0) return std::numeric_limits<double>::infinity();
    return std::max(a / b, b / a);
  };
  st.refine_ratio = ratio(st.refined.suite_constant, st.base.suite_constant);
  st.double_ratio = ratio(st.doubled.suite_constant, st.base.suite_constant);
  const char* verdict = st.stable() ? "stable" : "unstable";
  st.base.refinement_ratio = st.refine_ratio;
  st.base.verdict = verdict;
  st.refined.verdict = verdict;
  st.doubled.verdict = verdict;
  return st;
}

// ---------------------------------------------------------------------------

Atom make_atom(AtomKind kind, double center, double radius, const EuclidGroup& G,
               const GridSpec& grid) {
  if (G.n != 1) throw DomainViolation("atoms are generated on n = 1 backends");
  if (radius > 1.0) throw BadRadius("atoms live on balls of radius <= 1");
  if (radius < 4.0 * grid.step) throw BadRadius("atom radius unresolved on the grid");
  if (std::abs(center) + radius > grid.half_width)
    throw BadRadius("atom ball leaves the grid");

  Atom atom;
  atom.kind = kind;
  atom.center = center;
  atom.radius = radius;
  atom.values = zero_field(1, grid);

  const Index n = grid.size();
  ArrayXd chi(n);
  const double v = G.drift.size() ? G.drift[0] : 0.0;
  for (Index i = 0; i < n; ++i) chi[i] = std::exp(v * grid.point(i));

  ArrayXd profile = ArrayXd::Zero(n);
  ArrayXd ball = ArrayXd::Zero(n);
  for (Index i = 0; i < n; ++i) {
    const double x = grid.point(i);
    if (std::abs(x - center) > radius) continue;
    ball[i] = 1.0;
    if (kind == AtomKind::Global)
      profile[i] = 1.0;
    else
      profile[i] = x > center ? 1.0 : (x < center ? -1.0 : 0.0);
  }

  const double h = grid.step;
  const double ball_mass = h * (ball * chi).sum();  // mu_X(B)
  if (kind == AtomKind::Standard) {
    const double mean = h * (profile * chi).sum();
    profile -= (mean / ball_mass) * ball;
  }
  const double norm2 = std::sqrt(h * (profile.square() * chi).sum());
  if (!(norm2 > 0.0)) throw BadRadius("degenerate atom profile");
  const double target = 1.0 / std::sqrt(ball_mass);
  atom.values.values = ((target / norm2) * profile).cast<Complex>();
  return atom;
}

H1BoundReport h1_atomwise_bound(const MultiplierSpec& M, const EuclidGroup& G,
                                const std::vector<Atom>& atoms,
                                const CutoffFamily& cut, const GridSpec& symbol_grid) {
  if (G.n != 1) throw DomainViolation("atomwise bounds run on n = 1 backends");
  H1BoundReport rep;
  GridFunction M_real = M.trace(symbol_grid, 0.0);

  for (const Atom& atom : atoms) {
    Field out = apply_multiplier(M_real, atom.values, G);
    rep.per_atom.push_back(field_lp_norm(out, 1.0, G, 1.0));
    rep.suite_sup = std::max(rep.suite_sup, rep.per_atom.back());
  }

  // Hormander constants of the local part. On the line the convolution
  // kernel of an even multiplier is (1/2pi) times its transform, so the
  // local kernel is (1/2pi) eta^(x) M^(x): supported in [-2, 2] exactly.
  // Build it on the reciprocal lattice of a wide symbol grid.
  const GridSpec wide = GridSpec::make(4.0 * symbol_grid.half_width, symbol_grid.step);
  GridFunction M_wide = sample(
      wide, [&M](double x) { return M.eval(Complex(x, 0.0)); }, Parity::Even);
  M_wide.evaluator = nullptr;
  require_wrap_continuity(M_wide, "h1_atomwise_bound");
  SpectralObject Mh = forward_transform(M_wide);
  RadialKernel ell;
  ell.dim = 1;
  const double dxi = wide.frequency_step();
  const Index edge = static_cast<Index>(std::floor(2.5 / dxi));
  ell.r_max = static_cast<double>(edge) * dxi;
  ell.radii.resize(edge + 1);
  ell.values.resize(edge + 1);
  for (Index k = 0; k <= edge; ++k) {
    const double x = static_cast<double>(k) * dxi;
    ell.radii[k] = x;
    ell.values[k] = cut.eta_hat(x) * Mh.value_at_mode(k) / (2.0 * kPi);
  }

  const double v = G.drift.size() ? G.drift[0] : 0.0;
  auto g_of = [&ell, v](double u) {
    return std::abs(ell.at(std::abs(u)) * std::exp(0.5 * v * u));
  };
  auto g_val = [&ell, v](double u) {
    return ell.at(std::abs(u)) * std::exp(0.5 * v * u);
  };

  const double h = ell.step();
  const double x_max = ell.r_max;
  const Index cells = static_cast<Index>(std::floor(2.0 * x_max / h)) + 1;
  double N1 = 0.0;
  for (double rho : {1.0, 0.5, 0.25, 0.125}) {
    for (int a = 0; a < 17; ++a) {
      const double y = -rho + 2.0 * rho * a / 16.0;
      for (int bb = a + 1; bb < 17; ++bb) {
        const double z = -rho + 2.0 * rho * bb / 16.0;
        double acc = 0.0;
        for (Index i = 0; i < cells; ++i) {
          const double x = -x_max + static_cast<double>(i) * h;
          if (std::abs(x) <= 2.0 * rho) continue;
          acc += std::abs(g_val(x - y) - g_val(x - z)) * h;
        }
        N1 = std::max(N1, acc);
      }
    }
  }
  rep.N1 = N1;

  double N2 = 0.0;
  for (Index i = 0; i < cells; ++i) {
    const double x = -x_max + static_cast<double>(i) * h;
    if (std::abs(x) <= 2.0) continue;
    N2 += g_of(x) * h;
  }
  rep.N2 = N2;
  return rep;
}

double bmo_norm(const Field& g, const EuclidGroup& G, const BmoOptions& opts) {
  if (g.dim != 1) throw DomainViolation("bmo norm runs on n = 1 fields");
  const GridSpec& grid = g.axis;
  const Index n = grid.size();
  const double h = grid.step;
  const double v = G.drift.size() && G.n >= 1 ? G.drift[0] : 0.0;
  ArrayXd chi(n);
  for (Index i = 0; i < n; ++i) chi[i] = std::exp(v * grid.point(i));

  auto ball_terms = [&](Index c, double radius, bool oscillation) {
    const Index half = static_cast<Index>(std::floor(radius / h));
    const Index lo = c - half, hi = c + half;
    if (lo < 0 || hi >= n) return -1.0;  // ball leaves the grid
    double mass = 0.0;
    Complex mean = 0.0;
    for (Index i = lo; i <= hi; ++i) {
      mass += chi[i] * h;
      mean += g.values[i] * chi[i] * h;
    }
    mean /= mass;
    double acc = 0.0;
    for (Index i = lo; i <= hi; ++i) {
      const Complex d = oscillation ? g.values[i] - mean : g.values[i];
      acc += std::norm(d) * chi[i] * h;
    }
    return std::sqrt(acc / mass);
  };

  double osc = 0.0, unit = 0.0;
  for (Index c = 0; c < n; c += opts.center_stride) {
    for (int k = 0; k < opts.radii; ++k) {
      const double radius = std::pow(2.0, -k);
      if (radius < 4.0 * h) break;
      const double t = ball_terms(c, radius, true);
      if (t >= 0.0) osc = std::max(osc, t);
    }
    const double u = ball_terms(c, 1.0, false);
    if (u >= 0.0) unit = std::max(unit, u);
  }
  return osc + unit;
}

// ---------------------------------------------------------------------------

namespace {

Field make_probe_random(const GridSpec& grid, std::mt19937_64& rng, double usable) {
  std::uniform_real_distribution<double> upos(-0.6 * usable, 0.6 * usable);
  std::uniform_real_distribution<double> ufreq(-4.0, 4.0);
  std::uniform_real_distribution<double> uwidth(0.5, 2.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Field f = zero_field(1, grid);
  const Index n = grid.size();
  for (int m = 0; m < 4; ++m) {
    const double x0 = upos(rng);
    const double xi = ufreq(rng);
    const double w = uwidth(rng);
    const Complex c(gauss(rng), gauss(rng));
    for (Index i = 0; i < n; ++i) {
      const double x = grid.point(i);
      const double envelope = std::exp(-0.5 * (x - x0) * (x - x0) / (w * w));
      if (envelope < 1e-14) continue;
      f.values[i] += c * envelope * std::exp(Complex(0.0, xi * x));
    }
  }
  return f;
}

// Weighted exponential probe chi^{-1/p} e^{i xi x} on a smooth window.
Field make_probe_weighted(const GridSpec& grid, double xi, double p, double v,
                          double usable, const CutoffFamily& cut) {
  Field f = zero_field(1, grid);
  const Index n = grid.size();
  const double T = usable;
  for (Index i = 0; i < n; ++i) {
    const double x = grid.point(i);
    const double window = cut.omega(0.75 * x / T);
    if (window == 0.0) continue;
    f.values[i] = window * std::exp(Complex(-v * x / p, xi * x));
  }
  return f;
}

}  // namespace

OperatorNormResult empirical_operator_norm(const MultiplierSpec& M, double p,
                                           const EuclidGroup& G, const GridSpec& grid,
                                           const OperatorNormOptions& opts) {
  if (!(p > 1.0) || std::isinf(p)) throw BadExponent("operator norms probe p in (1, inf)");
  if (G.n != 1) throw DomainViolation("operator-norm probes run on n = 1");
  GridFunction M_real = M.trace(grid, 0.0);
  const double v = G.drift.size() ? G.drift[0] : 0.0;
  const double usable = opts.support_fraction * grid.half_width;
  const CutoffFamily cut;

  std::vector<Field> probes;
  // Deterministic extremizers: frequencies where the boundary trace of the
  // symbol on the p-strip is largest, plus dc.
  const double W_p = std::abs(1.0 / p - 0.5) * std::abs(v);
  std::vector<std::pair<double, double>> scored;
  const double W_probe = std::min(W_p, 0.999 * M.validity_half_width());
  for (int i = 0; i <= 512; ++i) {
    const double xi = 8.0 * i / 512.0;
    double s = 0.0;
    if (M.family == MultiplierSpec::Family::Custom) {
      s = std::abs(M.eval(Complex(xi, 0.0)));
    } else {
      s = std::abs(M.eval(Complex(xi, W_probe)));
    }
    scored.emplace_back(s, xi);
  }
  std::sort(scored.rbegin(), scored.rend());
  std::vector<double> freqs = {0.0, scored[0].second, scored[1].second, scored[2].second};
  for (double xi : freqs) {
    probes.push_back(make_probe_weighted(grid, xi, p, v, usable, cut));
    if (xi != 0.0) probes.push_back(make_probe_weighted(grid, -xi, p, v, usable, cut));
  }

  std::seed_seq seq{opts.seed, static_cast<std::uint64_t>(grid.size())};
  std::mt19937_64 rng(seq);
  for (int t = 0; t < opts.trials; ++t) probes.push_back(make_probe_random(grid, rng, usable));

  OperatorNormResult out;
  out.domain_half_width = grid.half_width;
  out.probes = static_cast<int>(probes.size());
  std::vector<double> ratios(probes.size(), 0.0);
  parallel_for(static_cast<std::ptrdiff_t>(probes.size()), [&](std::ptrdiff_t i) {
    const Field& gfield = probes[static_cast<std::size_t>(i)];
    const double denom = field_lp_norm(gfield, p, G, 1.0);
    if (denom == 0.0) return;
    Field image = apply_multiplier(M_real, gfield, G, opts.conjugation_guard);
    // Restrict the image norm to the probe window: the circular seam at +-L
    // carries wrap residue that the exponential weight of mu_X would blow
    // up. The restriction only lowers the ratio, and the estimate is a
    // lower bound by policy anyway.
    for (Index j = 0; j < image.cells(); ++j)
      if (std::abs(grid.point(j)) > usable) image.values[j] = 0.0;
    ratios[static_cast<std::size_t>(i)] = field_lp_norm(image, p, G, 1.0) / denom;
  });
  for (double r : ratios) out.estimate = std::max(out.estimate, r);
  return out;
}

ScalingStudy operator_norm_scaling_study(const MultiplierSpec& M, double p,
                                         const EuclidGroup& G, const GridSpec& base,
                                         int doublings,
                                         const OperatorNormOptions& opts) {
  ScalingStudy study;
  for (int level = 0; level <= doublings; ++level) {
    const GridSpec grid{base.half_width * std::pow(2.0, level), base.step};
    study.levels.push_back(empirical_operator_norm(M, p, G, grid, opts));
  }
  const double base_est = study.levels.front().estimate;
  study.min_growth = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < study.levels.size(); ++i) {
    if (base_est > 0.0)
      study.total_drift = std::max(study.total_drift,
                                   std::abs(study.levels[i].estimate / base_est - 1.0));
    if (i > 0 && study.levels[i - 1].estimate > 0.0)
      study.min_growth = std::min(study.min_growth,
                                  study.levels[i].estimate / study.levels[i - 1].estimate);
  }
  return study;
}

}  // namespace stripcalc
