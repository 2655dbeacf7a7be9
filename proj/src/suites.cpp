#include "stripcalc/verifier.hpp"

namespace stripcalc {

std::vector<SuiteMember> dyadic_local_suite(const GridSpec& grid, const DyadicCutoff& psi,
                                            const CutoffFamily& cut, int j_min, int j_max) {
  // Dyadic blocks of a fixed Mihlin-type symbol, then spectral truncation to
  // [-2, 2] (exact band limitation on the grid's reciprocal lattice).
  auto mother = [](double lam) { return 1.0 / std::sqrt(1.0 + lam * lam); };
  std::vector<SuiteMember> suite;
  for (int j = j_min; j <= j_max; ++j) {
    const double scale = std::ldexp(1.0, j);
    GridFunction block = sample_real(
        grid,
        [&mother, &psi, scale](double lam) {
          const double cutv = psi.pair(lam);
          return cutv == 0.0 ? 0.0 : mother(scale * lam) * cutv;
        },
        Parity::Even);
    block.evaluator = nullptr;
    SpectralObject Bh = forward_transform(block);
    const Index m = grid.max_mode();
    for (Index k = -m; k <= m; ++k)
      Bh.fourier_values[k + m] *= cut.eta_hat(grid.frequency(k));
    Bh.support = SpectralSupport::interval(-2.0, 2.0);
    SuiteMember member;
    member.id = "dyadic_block_j" + std::to_string(j);
    member.F = inverse_transform(Bh);
    member.F.parity = Parity::Even;
    suite.push_back(std::move(member));
  }
  return suite;
}

std::vector<SuiteMember> band_suite(const GridSpec& grid, int h_min, int h_max) {
  if (h_min < 3) throw BadBandIndex("band suite starts at h = 3");
  std::vector<SuiteMember> suite;
  for (int h = h_min; h <= h_max; ++h) {
    SpectralObject F = symmetric_band_bump(static_cast<double>(h) - 1.875, 1.75, grid);
    SuiteMember member;
    member.id = "band_h" + std::to_string(h);
    member.F = inverse_transform(F);
    member.F.parity = Parity::Even;
    member.band = h;
    suite.push_back(std::move(member));
  }
  return suite;
}

}  // namespace stripcalc
