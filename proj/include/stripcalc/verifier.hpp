#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stripcalc/cutoffs.hpp"
#include "stripcalc/euclid.hpp"
#include "stripcalc/grid.hpp"
#include "stripcalc/paley_wiener.hpp"
#include "stripcalc/spaces.hpp"

namespace stripcalc {

/// Exponents entering the kernel estimates: base Lebesgue exponent beta,
/// smoothness sigma > 1/beta, kernel growth varpi, Plancherel weight gamma,
/// strip half-width W.
struct AssumptionParams {
  double beta = 2.0;
  double sigma = 1.5;
  double varpi = 0.0;
  double gamma = 0.6;
  double W = 1.0;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Smoothness thresholds

struct GeneralThreshold {
  AssumptionParams params;
};
struct PolyThreshold {
  double d0 = 1, d_inf = 1, delta = 1;
  double beta = 2.0;  // used only for the derived q
  double W = 1.0;
};
struct SolvableThreshold {
  int Q = 2;
  double alpha = 1.0;
};
using ThresholdSpec = std::variant<GeneralThreshold, PolyThreshold, SolvableThreshold>;

struct ThresholdResult {
  double s_min = 0.0;       // strict lower bound on the smoothness order
  double q = 0.0;           // 1/q = |2/p - 1| / beta
  double strip_width = 0.0; // |2/p - 1| W
};

/// Minimal smoothness order for L^p boundedness. Throws BadExponent for
/// p = 2 or p outside [1, inf].
ThresholdResult smoothness_threshold(double p, const ThresholdSpec& spec);

// ---------------------------------------------------------------------------
// Multiplier families and the parabola-to-strip map

/// Even holomorphic multipliers M_X(z) = family(b^2 + z^2) given directly in
/// the strip variable z; `b` locates the branch points +-ib, so the powers
/// are holomorphic and bounded exactly on strips of half-width < b.
struct MultiplierSpec {
  enum class Family { ImaginaryPower, ResolventPower, Gaussian, Custom };

  Family family = Family::ResolventPower;
  double b = 1.0;
  double gamma_tilde = 1.0;  // imaginary power (b^2+z^2)^{i gamma}
  double power = 1.0;        // resolvent power (b^2+z^2)^{-power}
  double heat_time = 1.0;    // gaussian e^{-t (b^2+z^2)}
  GridFunction custom;       // Family::Custom: samples of M_X on R
  double custom_validity = 0.0;

  double validity_half_width() const;
  Complex eval(Complex z) const;
  /// x -> M_X(x + i y) sampled on `grid`, closed form attached as evaluator.
  GridFunction trace(const GridSpec& grid, double y) const;
  GridFunction on_real_line(const GridSpec& grid) const { return trace(grid, 0.0); }
  std::string name() const;
};

struct ParabolaTraces {
  double W = 0.0;    // strip half-width |1/p - 1/2| |X|
  double b_X = 0.0;  // |X| / 2; consistency: W == |2/p - 1| b_X
  GridFunction center, upper, lower;
  /// max over the sampled upper boundary of |Re zeta - parabola(Im zeta)|,
  /// zeta = b_X^2 + (x + iW)^2; the strip boundary maps onto the parabola
  /// boundary, so this is a discretization defect.
  double boundary_defect = 0.0;
};

/// Boundary traces of M_X on the strip of half-width W_{X,p}. Throws
/// DomainViolation when the strip exceeds the multiplier's declared validity
/// and BadExponent for p = 2.
ParabolaTraces parabola_map(const MultiplierSpec& M, double p, double abs_X,
                            const GridSpec& grid);

// ---------------------------------------------------------------------------
// Assumption harness

enum class WhichAssumption { A, B, C };

struct SuiteMember {
  std::string id;
  GridFunction F;
  int band = 0;  // h for band-supported members; 0 otherwise
};

struct AssumptionCase {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
};

struct VerificationReport {
  std::string assumption;
  std::string backend;
  AssumptionParams params;
  std::vector<AssumptionCase> cases;
  double suite_constant = 0.0;
  double refinement_ratio = 0.0;  // filled by the stability driver
  std::string verdict = "n/a";
};

struct AssumptionOptions {
  int y_net = 17;              // net points across [-1, 1] for the sup over y
  Index kernel_points = 2049;
  int r_net = 33;              // radii net for the sup over 0 < r <= 1
  /// Suite members are spectrally truncated bumps whose sub-exponential
  /// tails cannot reach generic kernel tolerances on desk-scale grids; their
  /// band limitation makes the truncated quadrature tail oscillatory, so a
  /// looser boundary level is safe here.
  double kernel_decay_tol = 1e-4;
};

/// Estimates the constant of one kernel inequality over a suite of test
/// multipliers on the Euclidean backend. A and C require n in {1, 2}; B any n.
VerificationReport verify_assumption(WhichAssumption which, const EuclidGroup& G,
                                     const std::vector<SuiteMember>& suite,
                                     const AssumptionParams& params,
                                     const DyadicCutoff& psi,
                                     const AssumptionOptions& opts = {});

/// Canonical suites. The local suite consists of dyadic blocks of a fixed
/// Mihlin-type symbol, spectrally truncated to [-2, 2]; the band suite of
/// even bump pairs with frequency support in +-[h-2, h].
std::vector<SuiteMember> dyadic_local_suite(const GridSpec& grid, const DyadicCutoff& psi,
                                            const CutoffFamily& cut, int j_min = 0,
                                            int j_max = 6);
std::vector<SuiteMember> band_suite(const GridSpec& grid, int h_min = 3, int h_max = 10);

struct StabilityStudy {
  VerificationReport base, refined, doubled;
  double refine_ratio = 1.0;  // max(c'/c, c/c') under step halving
  double double_ratio = 1.0;  // same under domain doubling
  bool stable(double tol = 2.0) const { return refine_ratio < tol && double_ratio < tol; }
};

/// Runs the assumption check on the canonical suite over the base grid, a
/// step-refined grid, and a domain-doubled grid, and compares the suite
/// constants.
StabilityStudy assumption_stability(WhichAssumption which, const EuclidGroup& G,
                                    const AssumptionParams& params,
                                    const DyadicCutoff& psi, const CutoffFamily& cut,
                                    const GridSpec& base_grid,
                                    const AssumptionOptions& opts = {});

// ---------------------------------------------------------------------------
// Atoms, bmo, operator norms

enum class AtomKind { Standard, Global };

struct Atom {
  AtomKind kind = AtomKind::Standard;
  double center = 0.0;
  double radius = 1.0;
  Field values;
};

/// Two-bump (standard) or one-bump (global) profile on the ball, mean-zero
/// in the discrete mu_X inner product for the standard kind, scaled to
/// saturate ||a||_{L^2(mu_X)} = mu_X(B)^{-1/2}. Throws BadRadius for
/// radius > 1. n = 1 backends only.
Atom make_atom(AtomKind kind, double center, double radius, const EuclidGroup& G,
               const GridSpec& grid);

struct H1BoundReport {
  double suite_sup = 0.0;
  std::vector<double> per_atom;
  double N1 = 0.0;  // Hormander difference constant of the local part
  double N2 = 0.0;  // outer-integral constant of the local part (~0)
};

H1BoundReport h1_atomwise_bound(const MultiplierSpec& M, const EuclidGroup& G,
                                const std::vector<Atom>& atoms,
                                const CutoffFamily& cut, const GridSpec& symbol_grid);

struct BmoOptions {
  Index center_stride = 4;
  int radii = 9;  // dyadic radii 1, 1/2, ..., plus the unit-ball term
};

/// Discrete bmo(mu_X) norm over a net of balls of radius <= 1 (oscillation
/// term plus unit-ball L^2 average), computed on function representatives.
double bmo_norm(const Field& g, const EuclidGroup& G, const BmoOptions& opts = {});

struct OperatorNormOptions {
  int trials = 24;
  std::uint64_t seed = 0x5eedbeefcafeULL;
  double support_fraction = 0.75;
  double conjugation_guard = 1e12;
};

struct OperatorNormResult {
  double estimate = 0.0;
  double domain_half_width = 0.0;
  int probes = 0;
};

/// Lower estimate of ||M(D_X)||_{L^p(mu_X)} by maximizing over fixed-seed
/// random fields plus deterministic weighted-exponential probes.
OperatorNormResult empirical_operator_norm(const MultiplierSpec& M, double p,
                                           const EuclidGroup& G, const GridSpec& grid,
                                           const OperatorNormOptions& opts = {});

struct ScalingStudy {
  std::vector<OperatorNormResult> levels;  // domain doublings at fixed step
  double total_drift = 0.0;                // max |est/est0 - 1|
  double min_growth = 0.0;                 // min consecutive ratio
};

ScalingStudy operator_norm_scaling_study(const MultiplierSpec& M, double p,
                                         const EuclidGroup& G, const GridSpec& base,
                                         int doublings,
                                         const OperatorNormOptions& opts = {});

}  // namespace stripcalc
