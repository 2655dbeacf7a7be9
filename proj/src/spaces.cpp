#include "stripcalc/spaces.hpp"

#include <cmath>

namespace stripcalc {

void NormParams::validate() const {
  switch (kind) {
    case NormKind::Weighted:
    case NormKind::WeightedW:
      if (!(q > 1.0) || std::isinf(q))
        throw BadExponent("weighted norms need q in (1, inf)");
      break;
    case NormKind::StripSup:
      if (!(W >= 0.0)) throw BadExponent("strip norm needs W >= 0");
      break;
    default:
      break;
  }
  if (sigma < 0.0) throw BadExponent("smoothness order must be >= 0");
}

double bessel_norm(const GridFunction& F, double sigma, double q) {
  if (!(q > 1.0)) throw BadExponent("bessel_norm needs q in (1, inf]");
  if (sigma < 0.0) throw BadExponent("bessel_norm needs sigma >= 0");
  if (F.max_abs() == 0.0) return 0.0;
  if (sigma == 0.0) return lq_norm(F, q);
  require_boundary_decay(F, "bessel_norm");
  return lq_norm(bessel_potential(F, sigma), q);
}

// N = 6561 = 3^8 keeps the FFT in fast radix-3 butterflies.
GridSpec dyadic_piece_grid() { return GridSpec::make(8.0, 1.0 / 410); }

int dyadic_truncation_index(const GridSpec& grid) {
  return std::max(0, static_cast<int>(std::ceil(std::log2(4.0 * grid.half_width))));
}

double weighted_sobolev_norm(const GridFunction& F, double sigma, double tau,
                             double q, double r, const DyadicCutoff& psi,
                             DyadicTermReport* report) {
  if (!(q > 1.0) || std::isinf(q))
    throw BadExponent("weighted_sobolev_norm needs q in (1, inf)");
  if (!(r >= 1.0)) throw BadExponent("weighted_sobolev_norm needs r >= 1");
  const int k_max = dyadic_truncation_index(F.grid);
  const GridSpec piece_grid = dyadic_piece_grid();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    const double scale = std::ldexp(1.0, k);
    GridFunction piece = sample(
        piece_grid,
        [&F, &psi, scale, k](double lam) {
          const double cut = k == 0 ? psi.plateau(lam) : psi.pair(lam);
          if (cut == 0.0) return Complex(0.0, 0.0);
          return F.at(scale * lam) * cut;
        },
        Parity::None);
    piece.evaluator = nullptr;  // pieces are consumed on their own grid
    const double w = std::pow(2.0, static_cast<double>(k) * (tau + 1.0 / q));
    terms.push_back(w * bessel_norm(piece, sigma, q));
  }
  double value;
  if (std::isinf(r)) {
    value = 0.0;
    for (double t : terms) value = std::max(value, t);
  } else {
    double acc = 0.0;
    for (double t : terms) acc += std::pow(t, r);
    value = std::pow(acc, 1.0 / r);
  }
  if (report) {
    report->truncation_index = k_max;
    report->terms = terms;
    report->tail_estimate = terms.empty() ? 0.0 : terms.back();
  }
  return value;
}

double pointwise_norm(const GridFunction& F, int N, double tau,
                      PointwiseVariant variant, double q) {
  if (N < 0) throw BadExponent("derivative order must be >= 0");
  double best = 0.0;
  for (int k = 0; k <= N; ++k) {
    const GridFunction d = spectral_derivative(F, k);
    const double e = static_cast<double>(k) + tau;
    auto weight = [e](double x) { return std::pow(1.0 + std::abs(x), e); };
    const double v = variant == PointwiseVariant::C
                         ? lq_norm_weighted(d, std::numeric_limits<double>::infinity(), weight)
                         : lq_norm_weighted(d, q, weight);
    best = std::max(best, v);
  }
  return best;
}

namespace {

double line_sup(const GridFunction& trace, int N, double y) {
  double best = 0.0;
  for (int j = 0; j <= N; ++j) {
    const GridFunction d = spectral_derivative(trace, j);
    const Index n = d.grid.size();
    for (Index i = 0; i < n; ++i) {
      const double x = d.grid.point(i);
      const double w = std::pow(1.0 + std::hypot(x, y), j);
      best = std::max(best, w * std::abs(d.values[i]));
    }
  }
  return best;
}

}  // namespace

double strip_sup_norm(const GridFunction& on_real, const GridFunction& upper,
                      const GridFunction& lower, int N, double W) {
  double best = line_sup(on_real, N, 0.0);
  best = std::max(best, line_sup(upper, N, W));
  best = std::max(best, line_sup(lower, N, -W));
  return best;
}

double sloc_norm(const GridFunction& F, double s, SlocBase base,
                 const DyadicCutoff& psi, SlocReport* report,
                 int points_per_octave) {
  const double q = base == SlocBase::LInf ? std::numeric_limits<double>::infinity() : 2.0;
  const int octaves = dyadic_truncation_index(F.grid);
  const GridSpec piece_grid = dyadic_piece_grid();
  const int m_max = octaves * points_per_octave;
  double best = 0.0;
  double best_t = 1.0;
  for (int m = -m_max; m <= m_max; ++m) {
    const double t = std::pow(2.0, static_cast<double>(m) / points_per_octave);
    GridFunction piece = sample(
        piece_grid,
        [&F, &psi, t](double lam) {
          const double cut = psi(lam);
          if (cut == 0.0) return Complex(0.0, 0.0);
          return F.at(t * lam) * cut;
        },
        Parity::None);
    piece.evaluator = nullptr;
    const double v = bessel_norm(piece, s, q);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  if (report) {
    report->maximizing_t = best_t;
    report->points_per_octave = points_per_octave;
    report->t_min = std::pow(2.0, -octaves);
    report->t_max = std::pow(2.0, octaves);
  }
  return best;
}

double evaluate_norm(const GridFunction& F, const NormParams& params,
                     const DyadicCutoff& psi) {
  params.validate();
  switch (params.kind) {
    case NormKind::Bessel:
      return bessel_norm(F, params.sigma, params.q);
    case NormKind::Weighted:
      return weighted_sobolev_norm(F, params.sigma, params.tau, params.q, params.r, psi);
    case NormKind::PointwiseC:
      return pointwise_norm(F, static_cast<int>(params.sigma), params.tau, PointwiseVariant::C);
    case NormKind::WeightedW:
      return pointwise_norm(F, static_cast<int>(params.sigma), params.tau, PointwiseVariant::Wq,
                            params.q);
    case NormKind::StripSup:
      throw DomainViolation("strip norm needs boundary traces; use strip_sup_norm");
    case NormKind::SlocInf:
      return sloc_norm(F, params.sigma, SlocBase::LInf, psi);
    case NormKind::Sloc2:
      return sloc_norm(F, params.sigma, SlocBase::L2, psi);
  }
  throw BadExponent("unknown norm kind");
}

}  // namespace stripcalc
