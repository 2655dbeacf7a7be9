// stripcalc: command-line front end. Subcommands mirror the library's
// capabilities and emit deterministic CSV/JSON artifacts (gnuplot-ready).
// Exit codes: 0 success, 1 usage/input error, 2 verification failure.

#include <CLI11.hpp>
#include <clocale>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>

#include "stripcalc/report.hpp"
#include "stripcalc/solvable.hpp"
#include "stripcalc/verifier.hpp"

using namespace stripcalc;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

struct Common {
  std::string out_dir = ".";
  double L = 16.0;
  double h = 1.0 / 64;
  std::uint64_t seed = 0x5eedbeefcafeULL;

  GridSpec grid() const { return GridSpec::make(L, h); }
  json to_json() const {
    return json{{"out", out_dir}, {"L", L}, {"h", h}, {"seed", seed}};
  }
  std::string path(const std::string& name) const {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_dir, "output directory");
  cmd->add_option("--grid-L", c.L, "grid half-width");
  cmd->add_option("--grid-h", c.h, "grid step");
  cmd->add_option("--seed", c.seed, "root seed");
}

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF")
    return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

json input_stamp(const std::string& file) {
  return json{{"file", file}, {"sha1", content_hash(read_text_file(file))}};
}

void write_report(const Common& c, const std::string& name, json body) {
  body["tool"] = "stripcalc";
  write_text_file(c.path(name), body.dump(2) + "\n");
}

MultiplierSpec parse_family(const std::string& family, double b, double gamma_tilde,
                            double power, double heat_time) {
  MultiplierSpec M;
  M.b = b;
  M.gamma_tilde = gamma_tilde;
  M.power = power;
  M.heat_time = heat_time;
  if (family == "imaginary-power")
    M.family = MultiplierSpec::Family::ImaginaryPower;
  else if (family == "resolvent-power")
    M.family = MultiplierSpec::Family::ResolventPower;
  else if (family == "gaussian")
    M.family = MultiplierSpec::Family::Gaussian;
  else
    throw CLI::ValidationError("--family", "unknown family " + family);
  return M;
}

// ---------------------------------------------------------------------------

int run_threshold(const std::string& variant, double p, double n, double delta,
                  int Q, double alpha, const AssumptionParams& params, double beta,
                  double W) {
  ThresholdResult r;
  if (variant == "poly") {
    PolyThreshold t;
    t.d0 = t.d_inf = n;
    t.delta = delta;
    t.beta = beta;
    t.W = W;
    r = smoothness_threshold(p, t);
  } else if (variant == "solvable") {
    r = smoothness_threshold(p, SolvableThreshold{Q, alpha});
  } else if (variant == "general") {
    r = smoothness_threshold(p, GeneralThreshold{params});
  } else {
    throw CLI::ValidationError("--variant", "unknown variant " + variant);
  }
  std::printf("s_min = %g\n", r.s_min);
  std::printf("q = %g\n", r.q);
  std::printf("strip_width = %g\n", r.strip_width);
  return kExitOk;
}

int run_norm(const Common& c, const std::string& kind, double sigma, double tau,
             double q, const std::string& r_str, const std::string& input) {
  NormParams params;
  params.sigma = sigma;
  params.tau = tau;
  params.q = q;
  params.r = parse_exponent(r_str);
  if (kind == "bessel")
    params.kind = NormKind::Bessel;
  else if (kind == "weighted")
    params.kind = NormKind::Weighted;
  else if (kind == "pointwiseC")
    params.kind = NormKind::PointwiseC;
  else if (kind == "weightedW")
    params.kind = NormKind::WeightedW;
  else if (kind == "slocInf")
    params.kind = NormKind::SlocInf;
  else if (kind == "sloc2")
    params.kind = NormKind::Sloc2;
  else
    throw CLI::ValidationError("--kind", "unknown norm kind " + kind);
  GridFunction f = read_grid_function(input);
  DyadicCutoff psi;
  const double value = evaluate_norm(f, params, psi);
  std::printf("%s\n", format_double(value).c_str());
  json rep{{"subcommand", "norm"},
           {"config", json{{"kind", kind}, {"sigma", sigma}, {"tau", tau}, {"q", q}, {"r", r_str}}},
           {"input", input_stamp(input)},
           {"value", value}};
  write_report(c, "norm.json", rep);
  return kExitOk;
}

int run_split(const Common& c, const std::string& input) {
  GridFunction M = read_grid_function(input);
  CutoffFamily cut;
  SplitResult split = local_global_split(M, cut);
  write_grid_function(split.local_part, c.path("local.csv"));
  write_grid_function(split.global_part, c.path("global.csv"));
  json rep{{"subcommand", "split"},
           {"config", c.to_json()},
           {"input", input_stamp(input)},
           {"local_sup", split.local_part.max_abs()},
           {"global_sup", split.global_part.max_abs()}};
  write_report(c, "split.json", rep);
  return kExitOk;
}

int run_pw_check(const Common& c, const std::string& variant, double sigma, double b,
                 double q, double W, const std::vector<double>& sweep,
                 const std::vector<int>& bands, const std::string& input) {
  DyadicCutoff psi;
  CutoffFamily cut;
  CsvWriter csv({"sweep", "lhs", "rhs", "normalized_ratio"});
  json rep{{"subcommand", "pw-check"},
           {"config", json{{"variant", variant}, {"sigma", sigma}, {"b", b}, {"q", q},
                           {"W", W}, {"grid", c.to_json()}}}};
  bool ok = true;
  if (variant == "beyond-r") {
    std::vector<double> xs, ys;
    double lo = 1e300, hi = 0.0;
    for (double R : sweep) {
      SpectralObject F = symmetric_band_bump(R, 1.0, c.grid());
      PwDecayCase pc = pw_decay_beyond_r(F, sigma, b, W, q, psi);
      csv.add_row(std::vector<double>{R, pc.lhs, pc.rhs, pc.normalized_ratio});
      xs.push_back(R);
      ys.push_back(pc.lhs / pc.rhs);
      lo = std::min(lo, pc.normalized_ratio);
      hi = std::max(hi, pc.normalized_ratio);
    }
    ExpFitResult fit = fit_exp_poly(xs, ys);
    ok = std::abs(fit.exp_coeff + W) <= 0.10 * W && hi / lo < 10.0;
    rep["fitted_exp_coeff"] = fit.exp_coeff;
    rep["ratio_spread"] = hi / lo;
  } else if (variant == "bands") {
    GridFunction F = read_grid_function(input);
    rep["input"] = input_stamp(input);
    auto cases = pw_decay_bands(F, sigma, b, W, q, bands, psi, cut);
    double hi = 0.0;
    for (const auto& pc : cases) {
      csv.add_row(std::vector<double>{pc.sweep_value, pc.lhs, pc.rhs, pc.normalized_ratio});
      hi = std::max(hi, pc.normalized_ratio);
    }
    ok = std::isfinite(hi);
    rep["ratio_sup"] = hi;
  } else {
    throw CLI::ValidationError("--variant", "unknown variant " + variant);
  }
  csv.write(c.path("pw_check.csv"));
  rep["verdict"] = ok ? "pass" : "fail";
  write_report(c, "pw_check.json", rep);
  std::printf("pw-check %s\n", ok ? "pass" : "FAIL");
  return ok ? kExitOk : kExitVerdict;
}

int run_kernel(const Common& c, int n, double t, double r_max, Index points,
               const std::string& input, double v) {
  GridFunction F = input.empty()
                       ? sample_real(c.grid(), [t](double l) { return std::exp(-t * l * l); },
                                     Parity::Even)
                       : read_grid_function(input);
  KernelOptions opts;
  opts.r_max = r_max;
  opts.points = points;
  json rep{{"subcommand", "kernel"},
           {"config", json{{"n", n}, {"t", t}, {"rmax", r_max}, {"points", points},
                           {"drift", v}, {"grid", c.to_json()}}}};
  if (!input.empty()) rep["input"] = input_stamp(input);
  if (v != 0.0) {
    EuclidGroup G = EuclidGroup::line(v);
    Field kx = drift_kernel(F, G, opts);
    CsvWriter csv({"x", "re", "im"});
    for (Index i = 0; i < kx.cells(); ++i)
      csv.add_row(std::vector<double>{kx.coords(i)[0], kx.values[i].real(), kx.values[i].imag()});
    csv.write(c.path("kernel.csv"));
  } else {
    RadialKernel K = kernel_of_multiplier(F, n, opts);
    CsvWriter csv({"r", "re", "im"});
    for (Index i = 0; i < K.radii.size(); ++i)
      csv.add_row(std::vector<double>{K.radii[i], K.values[i].real(), K.values[i].imag()});
    csv.write(c.path("kernel.csv"));
  }
  write_report(c, "kernel.json", rep);
  return kExitOk;
}

int run_verify_assumptions(const Common& c, const std::string& which, double v,
                           AssumptionParams params, bool stability) {
  DyadicCutoff psi;
  CutoffFamily cut;
  EuclidGroup G = EuclidGroup::line(v);
  std::vector<WhichAssumption> list;
  if (which == "all" || which.find('A') != std::string::npos) list.push_back(WhichAssumption::A);
  if (which == "all" || which.find('B') != std::string::npos) list.push_back(WhichAssumption::B);
  if (which == "all" || which.find('C') != std::string::npos) list.push_back(WhichAssumption::C);
  if (list.empty()) throw CLI::ValidationError("--which", "expected A, B, C or all");

  bool all_ok = true;
  json all = json::array();
  CsvWriter csv({"assumption", "case", "lhs", "rhs", "constant"});
  for (WhichAssumption w : list) {
    json entry;
    if (stability) {
      StabilityStudy st = assumption_stability(w, G, params, psi, cut, c.grid());
      entry = to_json(st.base);
      entry["refine_ratio"] = st.refine_ratio;
      entry["double_ratio"] = st.double_ratio;
      all_ok = all_ok && st.stable();
      for (const auto& cs : st.base.cases)
        csv.add_row({st.base.assumption, cs.id, format_double(cs.lhs), format_double(cs.rhs),
                     format_double(cs.constant)});
    } else {
      const auto suite = w == WhichAssumption::C ? band_suite(c.grid())
                                                 : dyadic_local_suite(c.grid(), psi, cut);
      VerificationReport rep = verify_assumption(w, G, suite, params, psi);
      entry = to_json(rep);
      for (const auto& cs : rep.cases)
        csv.add_row({rep.assumption, cs.id, format_double(cs.lhs), format_double(cs.rhs),
                     format_double(cs.constant)});
    }
    all.push_back(entry);
  }
  csv.write(c.path("assumptions.csv"));
  write_report(c, "assumptions.json",
               json{{"subcommand", "verify-assumptions"},
                    {"config", json{{"which", which}, {"v", v}, {"params", to_json(params)},
                                    {"stability", stability}, {"grid", c.to_json()}}},
                    {"reports", all}});
  std::printf("verify-assumptions %s\n", all_ok ? "pass" : "FAIL");
  return all_ok ? kExitOk : kExitVerdict;
}

int run_parabola(const Common& c, const MultiplierSpec& M, double p, double abs_X) {
  ParabolaTraces t = parabola_map(M, p, abs_X, c.grid());
  CsvWriter csv({"x", "center_re", "center_im", "upper_re", "upper_im", "lower_re", "lower_im"});
  for (Index i = 0; i < c.grid().size(); ++i) {
    csv.add_row(std::vector<double>{c.grid().point(i), t.center.values[i].real(),
                                    t.center.values[i].imag(), t.upper.values[i].real(),
                                    t.upper.values[i].imag(), t.lower.values[i].real(),
                                    t.lower.values[i].imag()});
  }
  csv.write(c.path("parabola.csv"));
  const bool ok = t.boundary_defect < 1e-6;
  write_report(c, "parabola.json",
               json{{"subcommand", "parabola"},
                    {"config", json{{"family", M.name()}, {"p", p}, {"absX", abs_X},
                                    {"grid", c.to_json()}}},
                    {"W", t.W},
                    {"b_X", t.b_X},
                    {"boundary_defect", t.boundary_defect},
                    {"verdict", ok ? "pass" : "fail"}});
  std::printf("W = %g, boundary defect = %g\n", t.W, t.boundary_defect);
  return ok ? kExitOk : kExitVerdict;
}

int run_operator_norm(const Common& c, const MultiplierSpec& M, double p, double v,
                      int doublings, int trials, const std::string& expect) {
  EuclidGroup G = EuclidGroup::line(v);
  OperatorNormOptions opts;
  opts.trials = trials;
  opts.seed = c.seed;
  ScalingStudy st = operator_norm_scaling_study(M, p, G, c.grid(), doublings, opts);
  CsvWriter csv({"L", "estimate"});
  for (const auto& lv : st.levels)
    csv.add_row(std::vector<double>{lv.domain_half_width, lv.estimate});
  csv.write(c.path("operator_norm.csv"));
  bool ok = true;
  if (expect == "stable") ok = st.total_drift < 0.10;
  if (expect == "blowup") ok = st.min_growth >= 1.2;
  write_report(c, "operator_norm.json",
               json{{"subcommand", "operator-norm"},
                    {"config", json{{"family", M.name()}, {"p", p}, {"v", v},
                                    {"doublings", doublings}, {"trials", trials},
                                    {"expect", expect}, {"grid", c.to_json()}}},
                    {"total_drift", st.total_drift},
                    {"min_growth", st.min_growth},
                    {"verdict", ok ? "pass" : "fail"}});
  std::printf("operator-norm drift=%.4f min_growth=%.4f %s\n", st.total_drift,
              st.min_growth, ok ? "pass" : "FAIL");
  return ok ? kExitOk : kExitVerdict;
}

int run_atoms(const Common& c, int count, const std::string& kind, double v) {
  EuclidGroup G = EuclidGroup::line(v);
  const GridSpec grid = c.grid();
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> ucenter(-0.5 * grid.half_width, 0.5 * grid.half_width);
  std::uniform_real_distribution<double> uradius(std::max(0.05, 8.0 * grid.step), 1.0);
  CsvWriter csv({"kind", "center", "radius", "l2_target", "l2_actual", "muX_mean"});
  bool ok = true;
  for (int i = 0; i < count; ++i) {
    const AtomKind k = kind == "global" ? AtomKind::Global
                       : kind == "standard"
                           ? AtomKind::Standard
                           : (i % 2 == 0 ? AtomKind::Standard : AtomKind::Global);
    const double center = ucenter(rng);
    const double radius = uradius(rng);
    Atom a = make_atom(k, center, radius, G, grid);
    double mass = 0.0, l2 = 0.0, mean = 0.0;
    for (Index j = 0; j < a.values.cells(); ++j) {
      const double x = a.values.coords(j)[0];
      const double chi = std::exp(v * x);
      if (std::abs(x - a.center) <= a.radius) mass += chi * grid.step;
      l2 += std::norm(a.values.values[j]) * chi * grid.step;
      mean += a.values.values[j].real() * chi * grid.step;
    }
    const double target = 1.0 / std::sqrt(mass);
    const double actual = std::sqrt(l2);
    csv.add_row({k == AtomKind::Standard ? "standard" : "global", format_double(center),
                 format_double(radius), format_double(target), format_double(actual),
                 format_double(mean)});
    if (std::abs(actual - target) > 1e-10 * target) ok = false;
    if (k == AtomKind::Standard && std::abs(mean) > 1e-10) ok = false;
  }
  csv.write(c.path("atoms.csv"));
  write_report(c, "atoms.json",
               json{{"subcommand", "atoms"},
                    {"config", json{{"count", count}, {"kind", kind}, {"v", v},
                                    {"grid", c.to_json()}}},
                    {"verdict", ok ? "pass" : "fail"}});
  std::printf("atoms %s\n", ok ? "pass" : "FAIL");
  return ok ? kExitOk : kExitVerdict;
}

int run_bmo(const Common& c, const std::string& input, double v) {
  GridFunction g = read_grid_function(input);
  Field f;
  f.dim = 1;
  f.axis = g.grid;
  f.values = g.values;
  EuclidGroup G = EuclidGroup::line(v);
  const double value = bmo_norm(f, G);
  std::printf("%s\n", format_double(value).c_str());
  write_report(c, "bmo.json",
               json{{"subcommand", "bmo"},
                    {"config", json{{"v", v}, {"grid", c.to_json()}}},
                    {"input", input_stamp(input)},
                    {"value", value}});
  return kExitOk;
}

int run_solvable(const Common& c, int Q, double alpha, const std::vector<double>& rs,
                 double max_ratio) {
  SolvableGroup G = SolvableGroup::make(Q, alpha);
  CsvWriter csv({"Q", "alpha", "r", "log_I", "normalized_ratio", "regime"});
  double lo = 1e300, hi = 0.0;
  for (double r : rs) {
    SolvableBallIntegral I = char_ball_integral_solvable(G, r);
    const char* regime = I.regime == DriftRegime::Above      ? "above"
                         : I.regime == DriftRegime::Critical ? "critical"
                                                             : "below";
    csv.add_row({format_double(Q), format_double(alpha), format_double(r),
                 format_double(I.log_value), format_double(I.normalized_ratio), regime});
    lo = std::min(lo, I.normalized_ratio);
    hi = std::max(hi, I.normalized_ratio);
  }
  csv.write(c.path("solvable_integrals.csv"));
  const bool ok = max_ratio <= 0.0 || hi / lo < max_ratio;
  write_report(c, "solvable_integrals.json",
               json{{"subcommand", "solvable-integrals"},
                    {"config", json{{"Q", Q}, {"alpha", alpha}, {"r", rs},
                                    {"max_ratio", max_ratio}}},
                    {"ratio_spread", hi / lo},
                    {"verdict", ok ? "pass" : "fail"}});
  std::printf("solvable-integrals ratio spread %.4f %s\n", hi / lo, ok ? "pass" : "FAIL");
  return ok ? kExitOk : kExitVerdict;
}

int run_report(const Common& c) {
  // Quick pass over every capability; one combined artifact.
  json combined;
  combined["subcommand"] = "report";
  combined["config"] = c.to_json();
  bool ok = true;

  {
    PolyThreshold t;
    t.d0 = t.d_inf = 3;
    combined["threshold_poly_n3_p1"] = smoothness_threshold(1.0, t).s_min;
    combined["threshold_solvable_Q3_am4_p1"] =
        smoothness_threshold(1.0, SolvableThreshold{3, -4.0}).s_min;
  }
  {
    MultiplierSpec M;
    M.family = MultiplierSpec::Family::Gaussian;
    M.heat_time = 0.5;
    ParabolaTraces t = parabola_map(M, 1.5, 2.0, GridSpec::make(16.0, 1.0 / 64));
    combined["parabola_defect"] = t.boundary_defect;
    ok = ok && t.boundary_defect < 1e-6;
  }
  {
    DyadicCutoff psi;
    CutoffFamily cut;
    EuclidGroup G = EuclidGroup::line(2.0);
    AssumptionParams params;
    const GridSpec grid = GridSpec::make(64.0, 1.0 / 64);
    VerificationReport rep = verify_assumption(
        WhichAssumption::B, G, dyadic_local_suite(grid, psi, cut, 0, 3), params, psi);
    combined["assumption_B"] = to_json(rep);
    ok = ok && rep.suite_constant > 0.0 && std::isfinite(rep.suite_constant);
  }
  {
    SolvableGroup G = SolvableGroup::make(2, -1.0);
    double lo = 1e300, hi = 0.0;
    for (double r : {4.0, 8.0, 12.0, 16.0}) {
      const double ratio = char_ball_integral_solvable(G, r).normalized_ratio;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    combined["solvable_critical_ratio_spread"] = hi / lo;
    ok = ok && hi / lo < 10.0;
  }
  combined["verdict"] = ok ? "pass" : "fail";
  write_report(c, "report.json", combined);
  std::printf("report %s\n", ok ? "pass" : "FAIL");
  return ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"desk-scale multiplier-theorem toolkit"};
  app.set_config("--config", "", "plain key = value config file; flags win");
  app.allow_config_extras(true);
  app.require_subcommand(1);

  Common c;

  // threshold
  auto* th = app.add_subcommand("threshold", "smoothness-order lower bound");
  std::string th_variant = "poly";
  double th_p = 1.0, th_n = 1.0, th_delta = 1.0, th_beta = 2.0, th_W = 1.0;
  int th_Q = 2;
  double th_alpha = 1.0;
  AssumptionParams th_params;
  th->add_option("--variant", th_variant, "poly | solvable | general");
  th->add_option("--p", th_p, "Lebesgue exponent");
  th->add_option("--n", th_n, "dimension (poly)");
  th->add_option("--delta", th_delta, "sphere-growth exponent (poly)");
  th->add_option("--Q", th_Q, "homogeneous dimension (solvable)");
  th->add_option("--alpha", th_alpha, "drift parameter (solvable)");
  th->add_option("--beta", th_beta, "base exponent");
  th->add_option("--sigma", th_params.sigma, "smoothness (general)");
  th->add_option("--varpi", th_params.varpi, "kernel growth exponent (general)");
  th->add_option("--gamma", th_params.gamma, "weight exponent (general)");
  th->add_option("--W", th_W, "strip half-width");

  // norm
  auto* nm = app.add_subcommand("norm", "evaluate a function-space norm (prints the value; norm.json)");
  std::string nm_kind = "bessel", nm_r = "2", nm_input;
  double nm_sigma = 1.0, nm_tau = 0.0, nm_q = 2.0;
  nm->add_option("--kind", nm_kind, "bessel|weighted|pointwiseC|weightedW|slocInf|sloc2");
  nm->add_option("--sigma", nm_sigma, "smoothness order");
  nm->add_option("--tau", nm_tau, "weight exponent");
  nm->add_option("--q", nm_q, "Lebesgue exponent");
  nm->add_option("--r", nm_r, "summation exponent (number or inf)");
  nm->add_option("--input", nm_input, "grid-function CSV (x, re, im)")->required();
  add_common(nm, c);

  // split
  auto* sp = app.add_subcommand("split", "local/global frequency split (local.csv, global.csv: x, re, im)");
  std::string sp_input;
  sp->add_option("--input", sp_input, "grid-function CSV")->required();
  add_common(sp, c);

  // pw-check
  auto* pw = app.add_subcommand("pw-check", "strip-decay estimates (pw_check.csv: sweep, lhs, rhs, normalized_ratio)");
  std::string pw_variant = "beyond-r", pw_input;
  double pw_sigma = 1.0, pw_b = 0.0, pw_q = 2.0, pw_W = 1.0;
  std::vector<double> pw_sweep = {4.0, 8.0, 16.0, 32.0};
  std::vector<int> pw_bands = {3, 4, 5, 6, 7, 8, 9, 10};
  pw->add_option("--variant", pw_variant, "beyond-r | bands");
  pw->add_option("--sigma", pw_sigma, "smoothness");
  pw->add_option("--b", pw_b, "polynomial weight");
  pw->add_option("--q", pw_q, "Lebesgue exponent");
  pw->add_option("--W", pw_W, "strip half-width");
  pw->add_option("--sweep", pw_sweep, "R sweep")->delimiter(',');
  pw->add_option("--bands", pw_bands, "band indices")->delimiter(',');
  pw->add_option("--input", pw_input, "grid-function CSV (bands variant)");
  add_common(pw, c);

  // kernel
  auto* kr = app.add_subcommand("kernel", "radial kernel of a multiplier (kernel.csv: r|x, re, im)");
  int kr_n = 1;
  double kr_t = 1.0, kr_rmax = 8.0, kr_v = 0.0;
  Index kr_points = 1025;
  std::string kr_input;
  kr->add_option("--n", kr_n, "dimension");
  kr->add_option("--t", kr_t, "heat time for the default multiplier");
  kr->add_option("--rmax", kr_rmax, "radial extent");
  kr->add_option("--points", kr_points, "radial points");
  kr->add_option("--v", kr_v, "drift (emits the conjugated kernel on the line)");
  kr->add_option("--input", kr_input, "multiplier CSV (default: heat)");
  add_common(kr, c);

  // verify-assumptions
  auto* va = app.add_subcommand("verify-assumptions", "kernel-estimate constants (assumptions.csv: assumption, case, lhs, rhs, constant)");
  std::string va_which = "all";
  double va_v = 2.0;
  bool va_stab = false;
  AssumptionParams va_params;
  va->add_option("--which", va_which, "A, B, C, or all");
  va->add_option("--v", va_v, "drift");
  va->add_option("--beta", va_params.beta, "base exponent");
  va->add_option("--sigma", va_params.sigma, "smoothness");
  va->add_option("--varpi", va_params.varpi, "kernel growth exponent");
  va->add_option("--gamma", va_params.gamma, "weight exponent");
  va->add_option("--W", va_params.W, "strip half-width");
  va->add_flag("--stability", va_stab, "also refine the grid and double the domain");
  add_common(va, c);

  // parabola
  auto* pb = app.add_subcommand("parabola", "strip traces and the parabola image (parabola.csv: x, center/upper/lower re+im)");
  std::string pb_family = "gaussian";
  double pb_b = 1.0, pb_gt = 1.0, pb_u = 1.0, pb_t = 1.0, pb_p = 1.5, pb_absX = 2.0;
  pb->add_option("--family", pb_family, "imaginary-power | resolvent-power | gaussian");
  pb->add_option("--b", pb_b, "branch offset");
  pb->add_option("--gamma-tilde", pb_gt, "imaginary-power exponent");
  pb->add_option("--u", pb_u, "resolvent power");
  pb->add_option("--t", pb_t, "gaussian time");
  pb->add_option("--p", pb_p, "Lebesgue exponent");
  pb->add_option("--absX", pb_absX, "drift magnitude |X|");
  add_common(pb, c);

  // operator-norm
  auto* on = app.add_subcommand("operator-norm", "empirical L^p operator norms (operator_norm.csv: L, estimate)");
  std::string on_family = "resolvent-power", on_expect;
  double on_b = 0.5, on_gt = 4.0, on_u = 1.0, on_t = 1.0, on_p = 1.5, on_v = 1.0;
  int on_doublings = 2, on_trials = 16;
  on->add_option("--family", on_family, "multiplier family");
  on->add_option("--b", on_b, "branch offset");
  on->add_option("--gamma-tilde", on_gt, "imaginary-power exponent");
  on->add_option("--u", on_u, "resolvent power");
  on->add_option("--t", on_t, "gaussian time");
  on->add_option("--p", on_p, "Lebesgue exponent");
  on->add_option("--v", on_v, "drift");
  on->add_option("--doublings", on_doublings, "domain doublings");
  on->add_option("--trials", on_trials, "random probes per level");
  on->add_option("--expect", on_expect, "stable | blowup (sets the verdict)");
  add_common(on, c);

  // atoms
  auto* at = app.add_subcommand("atoms", "atom generation and invariants (atoms.csv: kind, center, radius, l2_target, l2_actual, muX_mean)");
  int at_count = 100;
  std::string at_kind = "both";
  double at_v = 2.0;
  at->add_option("--count", at_count, "number of atoms");
  at->add_option("--kind", at_kind, "standard | global | both");
  at->add_option("--v", at_v, "drift");
  add_common(at, c);

  // bmo
  auto* bm = app.add_subcommand("bmo", "discrete bmo norm of a grid field (prints the value; bmo.json)");
  std::string bm_input;
  double bm_v = 0.0;
  bm->add_option("--input", bm_input, "grid-function CSV")->required();
  bm->add_option("--v", bm_v, "drift");
  add_common(bm, c);

  // solvable-integrals
  auto* so = app.add_subcommand("solvable-integrals", "character-ball integrals (solvable_integrals.csv: Q, alpha, r, log_I, normalized_ratio, regime)");
  int so_Q = 2;
  double so_alpha = -1.0, so_max_ratio = 10.0;
  std::vector<double> so_r = {4.0, 8.0, 12.0, 16.0};
  so->add_option("--Q", so_Q, "homogeneous dimension");
  so->add_option("--alpha", so_alpha, "drift parameter");
  so->add_option("--r", so_r, "radius sweep")->delimiter(',');
  so->add_option("--max-ratio", so_max_ratio, "bounded-spread verdict (0 disables)");
  add_common(so, c);

  // report
  auto* rp = app.add_subcommand("report", "combined capability report (report.json)");
  add_common(rp, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (th->parsed())
      return run_threshold(th_variant, th_p, th_n, th_delta, th_Q, th_alpha, th_params,
                           th_beta, th_W);
    if (nm->parsed()) return run_norm(c, nm_kind, nm_sigma, nm_tau, nm_q, nm_r, nm_input);
    if (sp->parsed()) return run_split(c, sp_input);
    if (pw->parsed())
      return run_pw_check(c, pw_variant, pw_sigma, pw_b, pw_q, pw_W, pw_sweep, pw_bands,
                          pw_input);
    if (kr->parsed()) return run_kernel(c, kr_n, kr_t, kr_rmax, kr_points, kr_input, kr_v);
    if (va->parsed()) return run_verify_assumptions(c, va_which, va_v, va_params, va_stab);
    if (pb->parsed())
      return run_parabola(c, parse_family(pb_family, pb_b, pb_gt, pb_u, pb_t), pb_p, pb_absX);
    if (on->parsed())
      return run_operator_norm(c, parse_family(on_family, on_b, on_gt, on_u, on_t), on_p,
                               on_v, on_doublings, on_trials, on_expect);
    if (at->parsed()) return run_atoms(c, at_count, at_kind, at_v);
    if (bm->parsed()) return run_bmo(c, bm_input, bm_v);
    if (so->parsed()) return run_solvable(c, so_Q, so_alpha, so_r, so_max_ratio);
    if (rp->parsed()) return run_report(c);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
