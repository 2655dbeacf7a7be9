#include "stripcalc/paley_wiener.hpp"

#include <cmath>

namespace stripcalc {

SplitResult local_global_split(const GridFunction& M, const CutoffFamily& cut) {
  require_wrap_continuity(M, "local_global_split");
  SpectralObject Mh = forward_transform(M);
  const Index m = M.grid.max_mode();
  SpectralObject low = Mh;
  for (Index k = -m; k <= m; ++k)
    low.fourier_values[k + m] *= cut.eta_hat(M.grid.frequency(k));
  low.support = SpectralSupport::interval(-2.0, 2.0);
  SplitResult out;
  out.local_part = inverse_transform(low);
  out.local_part.parity = M.parity;
  out.global_part = out.local_part;
  out.global_part.values = M.values - out.local_part.values;
  out.global_part.evaluator = nullptr;
  out.local_part.evaluator = nullptr;
  return out;
}

SpectralObject band_piece(const GridFunction& M, int h, const CutoffFamily& cut) {
  if (h < 3) throw BadBandIndex("band_piece requires h >= 3");
  require_wrap_continuity(M, "band_piece");
  SpectralObject P = forward_transform(M);
  const Index m = M.grid.max_mode();
  for (Index k = -m; k <= m; ++k)
    P.fourier_values[k + m] *= cut.omega_h(M.grid.frequency(k), h);
  P.support = SpectralSupport::symmetric_pair(static_cast<double>(h - 2),
                                              static_cast<double>(h));
  return P;
}

GridFunction strip_shift(const SpectralObject& F, double t, double amplification_guard) {
  F.validate();
  const Index m = F.grid.max_mode();
  const double peak = F.max_abs();
  SpectralObject shifted = F;
  double shifted_peak = 0.0;
  double max_weight = 0.0;
  for (Index k = -m; k <= m; ++k) {
    const double xi = F.grid.frequency(k);
    if (!F.support.contains(xi)) {
      // Outside the declared support only rounding noise lives; never amplify it.
      shifted.fourier_values[k + m] = 0.0;
      continue;
    }
    const double w = std::exp(-t * xi);
    max_weight = std::max(max_weight, w);
    const Complex v = F.value_at_mode(k) * w;
    shifted.fourier_values[k + m] = v;
    shifted_peak = std::max(shifted_peak, std::abs(v));
  }
  // Rounding noise inside the declared support rides the largest weight; it
  // must stay a guard factor below the shifted signal peak.
  if (peak > 0.0 && shifted_peak > 0.0 &&
      max_weight * peak > amplification_guard * shifted_peak)
    throw UnstableShift("strip shift amplification exceeds the dynamic-range guard");
  GridFunction g = inverse_transform_with_evaluator(shifted);
  return g;
}

GridFunction poisson_kernel(double W, const GridSpec& grid) {
  if (!(W > 0)) throw BadExponent("poisson_kernel needs W > 0");
  return sample_real(
      grid, [W](double x) { return (W / kPi) / (x * x + W * W); }, Parity::Even);
}

LocalizationReport spectral_localization_check(const SpectralObject& G, double R,
                                               int k, double q) {
  const Index m = G.grid.max_mode();
  const double peak = G.max_abs();
  LocalizationReport rep;
  if (peak == 0.0) {
    rep.degenerate = true;
    return rep;
  }
  for (Index j = -m; j <= m; ++j) {
    const double xi = G.grid.frequency(j);
    if (std::abs(xi) < R && std::abs(G.value_at_mode(j)) >= 1e-10 * peak)
      throw SupportViolation("G^ has mass inside (-R, R)");
  }
  GridFunction g = inverse_transform(G);
  rep.lhs = lq_norm(g, q);
  SpectralObject D = G;
  for (Index j = -m; j <= m; ++j)
    D.fourier_values[j + m] *= std::pow(Complex(0.0, G.grid.frequency(j)), k);
  rep.rhs_no_const = std::pow(R, -k) * lq_norm(inverse_transform(D), q);
  rep.ratio = rep.rhs_no_const > 0.0 ? rep.lhs / rep.rhs_no_const : 0.0;
  return rep;
}

namespace {

double weighted_lq(const GridFunction& f, double b, double q) {
  return lq_norm_weighted(f, q, [b](double x) { return std::pow(1.0 + std::abs(x), b); });
}

PwDecayCase decay_case(const SpectralObject& piece, double sweep, double sigma,
                       double b, double W, double q, double rhs) {
  PwDecayCase c;
  c.sweep_value = sweep;
  c.lhs = weighted_lq(inverse_transform(piece), b, q);
  c.rhs = rhs;
  const double predicted = std::pow(sweep, -sigma) * std::exp(-W * sweep) * rhs;
  c.normalized_ratio = predicted > 0.0 ? c.lhs / predicted : 0.0;
  return c;
}

}  // namespace

PwDecayCase pw_decay_beyond_r(const SpectralObject& F, double sigma, double b,
                              double W, double q, const DyadicCutoff& psi) {
  F.validate();
  const double R = F.support.min_abs();
  if (!(R > 0)) throw SupportViolation("support must stay away from 0");
  GridFunction trace = strip_shift(F, W);
  const double rhs = weighted_sobolev_norm(trace, sigma, b - sigma, q, q, psi);
  return decay_case(F, R, sigma, b, W, q, rhs);
}

std::vector<PwDecayCase> pw_decay_bands(const GridFunction& F, double sigma,
                                        double b, double W, double q,
                                        const std::vector<int>& h_list,
                                        const DyadicCutoff& psi,
                                        const CutoffFamily& cut) {
  SpectralObject Fh = tighten_support(forward_transform(F));
  GridFunction trace = strip_shift(Fh, W);
  const double rhs = weighted_sobolev_norm(trace, sigma, b - sigma, q, q, psi);
  std::vector<PwDecayCase> out;
  out.reserve(h_list.size());
  for (int h : h_list) {
    SpectralObject piece = band_piece(F, h, cut);
    out.push_back(decay_case(piece, static_cast<double>(h), sigma, b, W, q, rhs));
  }
  return out;
}

ExpFitResult fit_exp_poly(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw BadExponent("fit needs at least 3 samples");
  const Index n = static_cast<Index>(x.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd rhs(n);
  for (Index i = 0; i < n; ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = x[static_cast<std::size_t>(i)];
    A(i, 2) = std::log(x[static_cast<std::size_t>(i)]);
    rhs(i) = std::log(y[static_cast<std::size_t>(i)]);
  }
  Eigen::Vector3d c = A.colPivHouseholderQr().solve(rhs);
  return {c(0), c(1), c(2)};
}

SpectralObject symmetric_band_bump(double R, double width, const GridSpec& grid) {
  if (!(R > 0) || !(width > 0)) throw BadExponent("band bump needs R, width > 0");
  if (R + width >= grid.nyquist())
    throw SupportViolation("band exceeds the resolvable frequency range");
  SpectralObject F;
  F.grid = grid;
  F.support = SpectralSupport::symmetric_pair(R, R + width);
  const Index m = grid.max_mode();
  F.fourier_values = ArrayXcd::Zero(grid.size());
  auto profile = [R, width](double a) {
    const double u = 2.0 * (a - R) / width - 1.0;  // [-1, 1] across the band
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
  };
  for (Index k = -m; k <= m; ++k) {
    const double a = std::abs(grid.frequency(k));
    F.fourier_values[k + m] = profile(a);
  }
  return F;
}

}  // namespace stripcalc
