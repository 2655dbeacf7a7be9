#include "stripcalc/grid.hpp"

#include <unsupported/Eigen/FFT>
#include <memory>
#include <vector>

namespace stripcalc {

GridSpec GridSpec::make(double L, double h) {
  if (!(L > 0) || !(h > 0)) throw InvalidGrid("grid requires L > 0 and h > 0");
  const double ratio = L / h;
  if (std::abs(ratio - std::llround(ratio)) > 1e-9 * std::max(1.0, ratio))
    throw InvalidGrid("L/h must be an integer");
  return GridSpec{L, h};
}

ArrayXd GridSpec::points() const {
  const Index n = size();
  ArrayXd x(n);
  for (Index i = 0; i < n; ++i) x[i] = point(i);
  return x;
}

Complex GridFunction::at(double x) const {
  if (evaluator) return evaluator(x);
  const Index n = values.size();
  if (n == 0) return {};
  if (x < -grid.half_width || x > grid.half_width) return {};
  // 8-point Lagrange interpolation on the uniform grid.
  const double u = (x + grid.half_width) / grid.step;
  Index base = static_cast<Index>(std::floor(u)) - 3;
  base = std::max<Index>(0, std::min<Index>(base, n - 8));
  if (n < 8) base = 0;
  const Index pts = std::min<Index>(8, n);
  Complex acc = 0.0;
  for (Index j = 0; j < pts; ++j) {
    double w = 1.0;
    for (Index m = 0; m < pts; ++m) {
      if (m == j) continue;
      w *= (u - static_cast<double>(base + m)) /
           static_cast<double>(j - m);
    }
    acc += w * values[base + j];
  }
  return acc;
}

void GridFunction::validate() const {
  if (values.size() != grid.size())
    throw InvalidGrid("value array does not match the grid size");
  if (parity == Parity::None) return;
  const double scale = std::max(1e-300, max_abs());
  const Index n = values.size();
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  for (Index i = 0; i < n; ++i) {
    const Complex mirror = sign * values[n - 1 - i];
    if (std::abs(values[i] - mirror) > 1e-12 * scale)
      throw InvalidGrid("samples violate the declared parity");
  }
}

GridFunction sample(const GridSpec& grid, const std::function<Complex(double)>& f,
                    Parity parity) {
  GridFunction g;
  g.grid = grid;
  g.parity = parity;
  const Index n = grid.size();
  g.values.resize(n);
  for (Index i = 0; i < n; ++i) g.values[i] = f(grid.point(i));
  g.evaluator = f;
  return g;
}

GridFunction sample_real(const GridSpec& grid, const std::function<double(double)>& f,
                         Parity parity) {
  return sample(grid, [f](double x) { return Complex(f(x), 0.0); }, parity);
}

void SpectralObject::validate() const {
  if (fourier_values.size() != grid.size())
    throw InvalidGrid("fourier array does not match the grid size");
  const double scale = std::max(1.0, max_abs());
  const Index m = grid.max_mode();
  for (Index k = -m; k <= m; ++k) {
    if (support.contains(grid.frequency(k))) continue;
    if (std::abs(value_at_mode(k)) >= 1e-10 * scale)
      throw SupportViolation("fourier samples have mass outside the declared support");
  }
}

namespace {

// One FFT engine per thread; kissfft plans are cached per size inside.
Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

std::vector<Complex> to_vector(const ArrayXcd& a) {
  return std::vector<Complex>(a.data(), a.data() + a.size());
}

}  // namespace

SpectralObject forward_transform(const GridFunction& f) {
  f.validate();
  const Index n = f.grid.size();
  const Index m = f.grid.max_mode();
  std::vector<Complex> out;
  std::vector<Complex> in = to_vector(f.values);
  fft_engine().fwd(out, in);
  SpectralObject F;
  F.grid = f.grid;
  F.fourier_values.resize(n);
  const double h = f.grid.step;
  const double L = f.grid.half_width;
  for (Index k = -m; k <= m; ++k) {
    const Index idx = (k % n + n) % n;
    const double xi = f.grid.frequency(k);
    F.fourier_values[k + m] = h * std::exp(Complex(0.0, L * xi)) * out[static_cast<std::size_t>(idx)];
  }
  F.support = SpectralSupport::interval(-f.grid.nyquist(), f.grid.nyquist());
  return F;
}

GridFunction inverse_transform(const SpectralObject& F) {
  const Index n = F.grid.size();
  const Index m = F.grid.max_mode();
  std::vector<Complex> in(static_cast<std::size_t>(n));
  const double L = F.grid.half_width;
  for (Index k = -m; k <= m; ++k) {
    const Index idx = (k % n + n) % n;
    const double xi = F.grid.frequency(k);
    in[static_cast<std::size_t>(idx)] =
        F.fourier_values[k + m] * std::exp(Complex(0.0, -L * xi));
  }
  std::vector<Complex> out;
  fft_engine().inv(out, in);
  GridFunction g;
  g.grid = F.grid;
  g.values.resize(n);
  const double inv_h = 1.0 / F.grid.step;
  for (Index i = 0; i < n; ++i) g.values[i] = out[static_cast<std::size_t>(i)] * inv_h;
  return g;
}

SpectralObject tighten_support(const SpectralObject& F, double rel_threshold) {
  SpectralObject out = F;
  const double bound = rel_threshold * F.max_abs();
  const Index m = F.grid.max_mode();
  double edge = 0.0;
  for (Index k = -m; k <= m; ++k) {
    if (std::abs(F.value_at_mode(k)) >= bound)
      edge = std::max(edge, std::abs(F.grid.frequency(k)));
  }
  out.support = SpectralSupport::interval(-edge, edge);
  return out;
}

GridFunction inverse_transform_with_evaluator(const SpectralObject& F) {
  GridFunction g = inverse_transform(F);
  const Index m = F.grid.max_mode();
  auto modes = std::make_shared<std::vector<std::pair<double, Complex>>>();
  for (Index k = -m; k <= m; ++k) {
    const double xi = F.grid.frequency(k);
    const Complex v = F.value_at_mode(k);
    if (F.support.contains(xi) && v != Complex(0.0, 0.0))
      modes->emplace_back(xi, v);
  }
  const double inv_period = 1.0 / F.grid.period();
  const double L = F.grid.half_width;
  // The interpolant is periodic; beyond the grid span it would return the
  // alias of the central window, so extend by zero there instead.
  g.evaluator = [modes, inv_period, L](double x) -> Complex {
    if (x < -L || x > L) return {};
    Complex acc = 0.0;
    for (const auto& [xi, v] : *modes) acc += v * std::exp(Complex(0.0, x * xi));
    return acc * inv_period;
  };
  return g;
}

GridFunction spectral_derivative(const GridFunction& f, int k) {
  if (k == 0) return f;
  // The periodic continuation must not jump at the seam.
  const double scale = std::max(1e-300, f.max_abs());
  const Index n = f.grid.size();
  if (std::abs(f.values[0] - f.values[n - 1]) > 1e-6 * scale)
    throw NonDecayingInput("periodization jump at the grid boundary; derivative unreliable");
  SpectralObject F = forward_transform(f);
  const Index m = f.grid.max_mode();
  for (Index j = -m; j <= m; ++j) {
    const Complex iw = Complex(0.0, f.grid.frequency(j));
    F.fourier_values[j + m] *= std::pow(iw, k);
  }
  GridFunction g = inverse_transform(F);
  g.parity = f.parity == Parity::None
                 ? Parity::None
                 : ((k % 2 == 0) == (f.parity == Parity::Even) ? Parity::Even : Parity::Odd);
  return g;
}

GridFunction bessel_potential(const GridFunction& f, double sigma) {
  if (sigma == 0.0) return f;
  SpectralObject F = forward_transform(f);
  const Index m = f.grid.max_mode();
  for (Index j = -m; j <= m; ++j) {
    const double xi = f.grid.frequency(j);
    F.fourier_values[j + m] *= std::pow(1.0 + xi * xi, 0.5 * sigma);
  }
  GridFunction g = inverse_transform(F);
  g.parity = f.parity;
  return g;
}

bool boundary_decay_ok(const GridFunction& f, double tol, double fraction) {
  const Index n = f.grid.size();
  const Index edge = std::max<Index>(1, static_cast<Index>(std::floor(fraction * static_cast<double>(n))));
  const double bound = tol * std::max(1.0, f.max_abs());
  for (Index i = 0; i < edge; ++i) {
    if (std::abs(f.values[i]) > bound) return false;
    if (std::abs(f.values[n - 1 - i]) > bound) return false;
  }
  return true;
}

void require_boundary_decay(const GridFunction& f, const char* who, double tol) {
  if (!boundary_decay_ok(f, tol))
    throw NonDecayingInput(std::string(who) + ": input does not decay at the grid boundary");
}

void require_wrap_continuity(const GridFunction& f, const char* who, double tol) {
  const Index n = f.grid.size();
  if (n == 0) return;
  if (std::abs(f.values[0] - f.values[n - 1]) > tol * (1.0 + f.max_abs()))
    throw NonDecayingInput(std::string(who) + ": periodization jumps at the grid seam");
}

double lq_norm(const GridFunction& f, double q) {
  if (f.values.size() == 0) return 0.0;
  if (std::isinf(q)) return f.max_abs();
  if (!(q > 0)) throw BadExponent("L^q norm needs q > 0");
  const double s = (f.values.abs().pow(q)).sum();
  return std::pow(f.grid.step * s, 1.0 / q);
}

double lq_norm_weighted(const GridFunction& f, double q,
                        const std::function<double(double)>& weight) {
  const Index n = f.grid.size();
  if (n == 0) return 0.0;
  if (std::isinf(q)) {
    double best = 0.0;
    for (Index i = 0; i < n; ++i)
      best = std::max(best, weight(f.grid.point(i)) * std::abs(f.values[i]));
    return best;
  }
  if (!(q > 0)) throw BadExponent("L^q norm needs q > 0");
  double s = 0.0;
  for (Index i = 0; i < n; ++i)
    s += std::pow(weight(f.grid.point(i)) * std::abs(f.values[i]), q);
  return std::pow(f.grid.step * s, 1.0 / q);
}

}  // namespace stripcalc
