#pragma once

#include <vector>

#include "stripcalc/cutoffs.hpp"
#include "stripcalc/grid.hpp"

namespace stripcalc {

/// Selects which norm evaluate_norm computes.
enum class NormKind {
  Bessel,      // || (1 - d^2/dx^2)^{sigma/2} F ||_q
  Weighted,    // dyadic weighted Sobolev norm, parameters (sigma, tau, q, r)
  PointwiseC,  // max_k sup (1+|x|)^{k+tau} |F^(k)|
  WeightedW,   // max_k || (1+|x|)^{k+tau} F^(k) ||_q
  StripSup,    // strip sup norm from boundary traces
  SlocInf,     // sup_t || F(t.) psi ||  with L^inf Bessel base
  Sloc2,       //                        with L^2 base
};

struct NormParams {
  NormKind kind = NormKind::Bessel;
  double sigma = 0.0;  // smoothness order (sigma or N)
  double tau = 0.0;    // weight exponent
  double q = 2.0;      // Lebesgue exponent
  double r = 2.0;      // dyadic summation exponent (inf allowed)
  double W = 0.0;      // strip half-width

  void validate() const;
};

/// Bessel-potential norm of fractional order sigma >= 0 in L^q, computed
/// spectrally on the periodized grid. q in (1, inf]; sigma = 0 returns the
/// plain discrete L^q norm exactly. Requires boundary decay (aliasing guard).
double bessel_norm(const GridFunction& F, double sigma, double q);

struct DyadicTermReport {
  int truncation_index = 0;              // k_max
  std::vector<double> terms;             // weighted per-scale norms
  double tail_estimate = 0.0;            // last retained term
};

/// Weighted dyadic Sobolev norm: l^r over k >= 0 of
///   2^{k(tau + 1/q)} || F(2^k .) psi_(k) ||_{Bessel sigma, q},
/// psi_(0) the plateau, psi_(k) the symmetric pair for k > 0. The dyadic sum
/// is truncated at k_max with 2^{k_max} >= 4 L (reported).
double weighted_sobolev_norm(const GridFunction& F, double sigma, double tau,
                             double q, double r, const DyadicCutoff& psi,
                             DyadicTermReport* report = nullptr);

enum class PointwiseVariant { C, Wq };

/// max over derivative orders k <= N of the (1+|x|)^{k+tau}-weighted sup
/// (variant C) or L^q norm (variant Wq). Derivatives are spectral.
double pointwise_norm(const GridFunction& F, int N, double tau,
                      PointwiseVariant variant, double q = 2.0);

/// Strip sup norm max_{j<=N} sup (1+|z|)^j |F^(j)(z)| evaluated on the three
/// horizontal lines y in {0, +W, -W}; the caller supplies the boundary
/// traces x -> F(x +- iW) (holomorphy makes d/dz = d/dx along each line).
double strip_sup_norm(const GridFunction& on_real, const GridFunction& upper,
                      const GridFunction& lower, int N, double W);

enum class SlocBase { LInf, L2 };

struct SlocReport {
  double maximizing_t = 1.0;
  int points_per_octave = 16;
  double t_min = 0.0, t_max = 0.0;
};

/// sup_{t > 0} || F(t .) psi ||_{Bessel s, base} over a logarithmic t-grid
/// (16 points per octave by default).
double sloc_norm(const GridFunction& F, double s, SlocBase base,
                 const DyadicCutoff& psi, SlocReport* report = nullptr,
                 int points_per_octave = 16);

/// Dispatcher used by the CLI `norm` subcommand.
double evaluate_norm(const GridFunction& F, const NormParams& params,
                     const DyadicCutoff& psi);

/// Grid on which the rescaled dyadic pieces F(2^k .) psi_(k) are sampled.
GridSpec dyadic_piece_grid();

/// Truncation index: smallest k with 2^k >= 4 L.
int dyadic_truncation_index(const GridSpec& grid);

}  // namespace stripcalc
