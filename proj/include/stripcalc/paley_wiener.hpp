#pragma once

#include <vector>

#include "stripcalc/cutoffs.hpp"
#include "stripcalc/grid.hpp"
#include "stripcalc/spaces.hpp"

namespace stripcalc {

struct SplitResult {
  GridFunction local_part;   // M_l, with supp M_l^ in [-2, 2]
  GridFunction global_part;  // M_g = M - M_l
};

/// Low/high Fourier split M = M_l + M_g through the eta^ plateau.
SplitResult local_global_split(const GridFunction& M, const CutoffFamily& cut);

/// Band piece P_h with P_h^ = omega_h M^, declared support
/// [h-2, h] U [-h, -h+2]. Throws BadBandIndex for h < 3.
SpectralObject band_piece(const GridFunction& M, int h, const CutoffFamily& cut);

/// Samples of x -> F(x + i t), computed Fourier-side as F^(xi) e^{-t xi}
/// restricted to the declared support. Throws UnstableShift when the
/// amplification exceeds the guard relative to the peak of F^.
GridFunction strip_shift(const SpectralObject& F, double t,
                         double amplification_guard = 1e12);

/// P_W(x) = (W/pi) / (x^2 + W^2), with the closed form as evaluator.
GridFunction poisson_kernel(double W, const GridSpec& grid);

struct LocalizationReport {
  double lhs = 0.0;            // ||G||_q
  double rhs_no_const = 0.0;   // R^{-k} ||G^(k)||_q
  double ratio = 0.0;          // lhs / rhs_no_const
  bool degenerate = false;     // G == 0
};

/// Checks ||G||_q against R^{-k} ||G^(k)||_q for G^ supported away from
/// (-R, R). Throws SupportViolation when G^ has mass inside (-R, R).
LocalizationReport spectral_localization_check(const SpectralObject& G, double R,
                                               int k, double q);

struct PwDecayCase {
  double sweep_value = 0.0;       // R or h
  double lhs = 0.0;               // || (1+|.|)^b F ||_q
  double rhs = 0.0;               // strip-trace weighted Sobolev norm
  double normalized_ratio = 0.0;  // lhs / (sweep^{-sigma} e^{-W sweep} rhs)
};

/// Decay check for F^ supported beyond R (R = inner edge of the declared
/// support): one case of the sweep.
PwDecayCase pw_decay_beyond_r(const SpectralObject& F, double sigma, double b,
                              double W, double q, const DyadicCutoff& psi);

/// Decay check over band pieces F_h, h in h_list, of an even F with strip
/// data. The right-hand side is the shifted-trace norm of the full F.
std::vector<PwDecayCase> pw_decay_bands(const GridFunction& F, double sigma,
                                        double b, double W, double q,
                                        const std::vector<int>& h_list,
                                        const DyadicCutoff& psi,
                                        const CutoffFamily& cut);

struct ExpFitResult {
  double intercept = 0.0;
  double exp_coeff = 0.0;  // coefficient of x
  double log_coeff = 0.0;  // coefficient of log x
};

/// Least-squares fit log y = a + c x + d log x; used to extract exponential
/// decay coefficients from sweeps.
ExpFitResult fit_exp_poly(const std::vector<double>& x, const std::vector<double>& y);

/// Even band-limited test function with F^ = smooth bumps on
/// +-[R, R+width]; used by the decay sweeps.
SpectralObject symmetric_band_bump(double R, double width, const GridSpec& grid);

}  // namespace stripcalc
