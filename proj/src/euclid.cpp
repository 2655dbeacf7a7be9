#include "stripcalc/euclid.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>
#include <vector>

#include "stripcalc/parallel.hpp"
#include "stripcalc/quadrature.hpp"

namespace stripcalc {

EuclidGroup EuclidGroup::make(int n, const Eigen::VectorXd& v) {
  if (n < 1) throw DomainViolation("dimension must be >= 1");
  if (v.size() != n) throw DomainViolation("drift vector size must equal n");
  return EuclidGroup{n, v};
}

EuclidGroup EuclidGroup::line(double v1) {
  Eigen::VectorXd v(1);
  v << v1;
  return EuclidGroup{1, v};
}

double sphere_measure(int n) {
  // vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

Complex RadialKernel::at(double r) const {
  const Index n = values.size();
  if (n == 0) return {};
  r = std::abs(r);
  if (r > r_max) return {};
  const double h = step();
  const double u = r / h;
  Index base = static_cast<Index>(std::floor(u)) - 1;
  base = std::max<Index>(0, std::min<Index>(base, n - 4));
  Complex acc = 0.0;
  const Index pts = std::min<Index>(4, n);
  for (Index j = 0; j < pts; ++j) {
    double w = 1.0;
    for (Index m = 0; m < pts; ++m) {
      if (m == j) continue;
      w *= (u - static_cast<double>(base + m)) / static_cast<double>(j - m);
    }
    acc += w * values[base + j];
  }
  return acc;
}

namespace {

struct QuadNodes {
  std::vector<double> lambda;
  std::vector<double> weight;  // GL weight at the node
};

// Fixed Gauss-Legendre node set on [0, Lambda] with panels short enough for
// oscillation up to `freq`. Shared across all output radii.
QuadNodes build_nodes(double Lambda, double freq) {
  QuadNodes q;
  const double panel = std::min(0.5, 0.5 * kPi / std::max(freq, 1e-9));
  const long panels = std::max<long>(1, static_cast<long>(std::ceil(Lambda / panel)));
  const double len = Lambda / static_cast<double>(panels);
  q.lambda.reserve(static_cast<std::size_t>(panels) * 16);
  q.weight.reserve(static_cast<std::size_t>(panels) * 16);
  for (long p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * len;
    const double half = 0.5 * len;
    for (std::size_t i = 0; i < detail::kGL16Nodes.size(); ++i) {
      const double dx = half * detail::kGL16Nodes[i];
      const double w = half * detail::kGL16Weights[i];
      q.lambda.push_back(mid + dx);
      q.weight.push_back(w);
      q.lambda.push_back(mid - dx);
      q.weight.push_back(w);
    }
  }
  return q;
}

}  // namespace

RadialKernel kernel_of_multiplier(const GridFunction& F, int n,
                                  const KernelOptions& opts) {
  if (n < 1) throw DomainViolation("dimension must be >= 1");
  if (!boundary_decay_ok(F, opts.decay_tol))
    throw QuadratureDivergence(
        "multiplier does not decay at the grid boundary; tail integral unresolved");
  const double Lambda = F.grid.half_width;
  RadialKernel K;
  K.dim = n;
  K.r_max = opts.r_max;
  const Index pts = std::max<Index>(2, opts.points);
  K.radii = ArrayXd::LinSpaced(pts, 0.0, opts.r_max);
  K.values.resize(pts);

  const QuadNodes nodes = build_nodes(Lambda, opts.integrand_scale + opts.r_max);
  const std::size_t m = nodes.lambda.size();
  std::vector<Complex> f(m);
  for (std::size_t j = 0; j < m; ++j) f[j] = F.at(nodes.lambda[j]);

  const double half_n = 0.5 * static_cast<double>(n);
  const double front = std::pow(2.0 * kPi, -half_n);
  const double hr = K.radii.size() > 1 ? K.radii[1] - K.radii[0] : 0.0;

  if (n == 1 || n == 3) {
    // Uniform radii allow a rotation recurrence per quadrature node:
    // cos/sin(lambda r_i) advance by one rotation per radius, so the trig
    // evaluation cost is O(nodes), not O(nodes x radii).
    ArrayXcd acc = ArrayXcd::Zero(pts);
    for (std::size_t j = 0; j < m; ++j) {
      const Complex a = nodes.weight[j] * f[j] * (n == 1 ? 1.0 : nodes.lambda[j]);
      if (a == Complex(0.0, 0.0)) continue;
      const double cs = std::cos(nodes.lambda[j] * hr);
      const double sn = std::sin(nodes.lambda[j] * hr);
      double c = 1.0, s = 0.0;
      for (Index i = 0; i < pts; ++i) {
        acc[i] += a * (n == 1 ? c : s);
        const double cn = c * cs - s * sn;
        s = s * cs + c * sn;
        c = cn;
      }
    }
    for (Index i = 0; i < pts; ++i) {
      const double r = K.radii[i];
      if (n == 1) {
        K.values[i] = acc[i] / kPi;
      } else if (r < 1e-12) {
        Complex a0 = 0.0;  // limiting formula at the origin
        for (std::size_t j = 0; j < m; ++j)
          a0 += nodes.weight[j] * f[j] * nodes.lambda[j] * nodes.lambda[j];
        K.values[i] = a0 / (2.0 * kPi * kPi);
      } else {
        K.values[i] = acc[i] / (2.0 * kPi * kPi * r);
      }
    }
    return K;
  }

  parallel_for(pts, [&](std::ptrdiff_t i) {
    const double r = K.radii[i];
    Complex acc = 0.0;
    if (r < 1e-12) {
      // k(0) = vol(S^{n-1}) (2 pi)^{-n} \int F l^{n-1} dl
      for (std::size_t j = 0; j < m; ++j)
        acc += nodes.weight[j] * f[j] * std::pow(nodes.lambda[j], n - 1);
      K.values[i] = acc * sphere_measure(n) * std::pow(2.0 * kPi, -n);
      return;
    }
    for (std::size_t j = 0; j < m; ++j)
      acc += nodes.weight[j] * f[j] * std::cyl_bessel_j(half_n - 1.0, nodes.lambda[j] * r) *
             std::pow(nodes.lambda[j], half_n);
    acc *= front * std::pow(r, 1.0 - half_n);
    K.values[i] = acc;
  });
  return K;
}

Eigen::Vector2d Field::coords(Index i) const {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  const Index n = axis.size();
  if (dim == 1) {
    x[0] = axis.point(i);
  } else {
    x[0] = axis.point(i / n);
    x[1] = axis.point(i % n);
  }
  return x;
}

Field zero_field(int dim, const GridSpec& axis) {
  if (dim < 1 || dim > 2) throw DomainViolation("fields support n in {1, 2}");
  Field f;
  f.dim = dim;
  f.axis = axis;
  f.values = ArrayXcd::Zero(dim == 1 ? axis.size() : axis.size() * axis.size());
  return f;
}

double field_lp_norm(const Field& f, double p, const EuclidGroup& G,
                     double chi_exponent) {
  if (!(p > 0)) throw BadExponent("L^p norm needs p > 0");
  const double dv = f.cell_measure();
  double acc = 0.0;
  double sup = 0.0;
  const bool is_inf = std::isinf(p);
  for (Index i = 0; i < f.cells(); ++i) {
    const double a = std::abs(f.values[i]);
    if (a == 0.0) continue;
    double w = 1.0;
    if (chi_exponent != 0.0 && G.drift_norm() > 0.0) {
      const Eigen::Vector2d x = f.coords(i);
      double vx = 0.0;
      for (int d = 0; d < f.dim; ++d) vx += G.drift[d] * x[d];
      w = std::exp(chi_exponent * vx);
    }
    if (is_inf)
      sup = std::max(sup, a);  // the measure weight does not move an ess-sup
    else
      acc += std::pow(a, p) * w;
  }
  return is_inf ? sup : std::pow(dv * acc, 1.0 / p);
}

Field drift_kernel(const GridFunction& F, const EuclidGroup& G,
                   const KernelOptions& opts) {
  if (G.n > 2) throw DomainViolation("Cartesian drift kernels support n in {1, 2}");
  RadialKernel K = kernel_of_multiplier(F, G.n, opts);
  // Axis snapped to the radial table so |x| never exceeds it.
  const double step = K.radii[1] - K.radii[0];
  const Index half = static_cast<Index>(std::floor(
      (G.n == 1 ? opts.r_max : opts.r_max / std::sqrt(2.0)) / step));
  const GridSpec axis{static_cast<double>(half) * step, step};
  Field out = zero_field(G.n, axis);
  for (Index i = 0; i < out.cells(); ++i) {
    const Eigen::Vector2d x = out.coords(i);
    double r2 = 0.0, vx = 0.0;
    for (int d = 0; d < G.n; ++d) {
      r2 += x[d] * x[d];
      vx += (G.drift.size() ? G.drift[d] : 0.0) * x[d];
    }
    out.values[i] = std::exp(-0.5 * vx) * K.at(std::sqrt(r2));
  }
  return out;
}

PropagationReport finite_propagation_check(const SpectralObject& F_hat, double r,
                                           double tol, int n) {
  F_hat.validate();
  if (F_hat.support.max_abs() > r * (1.0 + 1e-9))
    throw SupportViolation("F^ is not supported in [-r, r]");
  GridFunction F = inverse_transform(F_hat);
  if (F_hat.time_evaluator) F.evaluator = F_hat.time_evaluator;

  KernelOptions opts;
  opts.r_max = 2.0 * r + 3.0;
  opts.points = 1025;
  opts.integrand_scale = r;  // F oscillates no faster than its band edge
  // Band-limited F may decay only algebraically; the truncated tail enters a
  // fully oscillatory integral (frequency >= the mass-edge radius), so the
  // mass fraction tolerates a much looser boundary level than generic
  // kernel quadrature.
  opts.decay_tol = 1e-4;
  RadialKernel K = kernel_of_multiplier(F, n, opts);

  const double h = K.radii[1] - K.radii[0];
  PropagationReport rep;
  rep.eps_grid = (2.0 * h + 2.0 * kPi / F.grid.half_width) / r + 0.01;
  const double edge = r * (1.0 + rep.eps_grid);
  double total = 0.0, leaked = 0.0;
  for (Index i = 0; i < K.radii.size(); ++i) {
    const double rho = K.radii[i];
    const double w = (i == 0 || i + 1 == K.radii.size()) ? 0.5 : 1.0;
    const double mass = w * h * std::abs(K.values[i]) * std::pow(rho, K.dim - 1);
    total += mass;
    if (rho > edge) leaked += mass;
  }
  rep.total_mass = total * sphere_measure(n);
  rep.leaked_fraction = total > 0.0 ? leaked / total : 0.0;
  rep.pass = rep.leaked_fraction < tol;
  return rep;
}

PlancherelReport plancherel_check(const GridFunction& F, int n,
                                  const KernelOptions& opts) {
  RadialKernel K = kernel_of_multiplier(F, n, opts);
  const double h = K.radii[1] - K.radii[0];
  double kernel_sq = 0.0;
  for (Index i = 0; i < K.radii.size(); ++i) {
    const double w = (i == 0 || i + 1 == K.radii.size()) ? 0.5 : 1.0;
    kernel_sq += w * h * std::norm(K.values[i]) * std::pow(K.radii[i], K.dim - 1);
  }
  kernel_sq *= sphere_measure(n);

  const double c_n = sphere_measure(n) * std::pow(2.0 * kPi, -n);
  const double Lambda = F.grid.half_width;
  const double spectral_sq =
      c_n * panel_quadrature(
                [&F, n](double l) {
                  return std::norm(F.at(l)) * std::pow(l, n - 1);
                },
                0.0, Lambda, 0.5 * kPi / std::max(1.0, opts.integrand_scale));

  PlancherelReport rep;
  rep.kernel_side = std::sqrt(kernel_sq);
  rep.spectral_side = std::sqrt(spectral_sq);
  rep.ratio = rep.spectral_side > 0.0 ? rep.kernel_side / rep.spectral_side : 1.0;
  return rep;
}

double char_ball_integral(const EuclidGroup& G, double r) {
  if (!(r > 0)) throw BadRadius("ball radius must be positive");
  const double a = G.drift_norm();
  const int n = G.n;
  if (a == 0.0)
    return sphere_measure(n) / static_cast<double>(n) * std::pow(r, n);
  if (n == 1) return 2.0 * std::sinh(a * r) / a;
  // \int_{S^{n-1}} e^{<v, rho w>} dsigma = (2 pi)^{n/2} (a rho)^{1 - n/2} I_{n/2-1}(a rho)
  const double half_n = 0.5 * static_cast<double>(n);
  auto shell = [a, n, half_n](double rho) {
    const double x = a * rho;
    const double surf =
        x < 1e-6 ? sphere_measure(n) * (1.0 + x * x / (2.0 * n))
                 : std::pow(2.0 * kPi, half_n) * std::pow(x, 1.0 - half_n) *
                       std::cyl_bessel_i(half_n - 1.0, x);
    return surf * std::pow(rho, n - 1);
  };
  const double tol = 1e-13 * std::exp(a * r) * std::pow(r, n - 1) + 1e-300;
  return adaptive_quadrature(shell, 0.0, r, tol);
}

namespace {

void fft_axis(ArrayXcd& data, Index n, bool inverse, int dim) {
  Eigen::FFT<double> engine;
  std::vector<Complex> in(static_cast<std::size_t>(n)), out;
  if (dim == 1) {
    for (Index i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = data[i];
    if (inverse)
      engine.inv(out, in);
    else
      engine.fwd(out, in);
    for (Index i = 0; i < n; ++i) data[i] = out[static_cast<std::size_t>(i)];
    return;
  }
  // rows then columns
  for (Index row = 0; row < n; ++row) {
    for (Index j = 0; j < n; ++j) in[static_cast<std::size_t>(j)] = data[row * n + j];
    if (inverse)
      engine.inv(out, in);
    else
      engine.fwd(out, in);
    for (Index j = 0; j < n; ++j) data[row * n + j] = out[static_cast<std::size_t>(j)];
  }
  for (Index col = 0; col < n; ++col) {
    for (Index j = 0; j < n; ++j) in[static_cast<std::size_t>(j)] = data[j * n + col];
    if (inverse)
      engine.inv(out, in);
    else
      engine.fwd(out, in);
    for (Index j = 0; j < n; ++j) data[j * n + col] = out[static_cast<std::size_t>(j)];
  }
}

}  // namespace

Field apply_multiplier(const GridFunction& M, const Field& g, const EuclidGroup& G,
                       double conjugation_guard) {
  if (g.dim != G.n) throw DomainViolation("field dimension does not match the group");
  Field work = g;
  const double peak = g.max_abs();
  if (peak == 0.0) return work;

  double conj_peak = 0.0;
  for (Index i = 0; i < work.cells(); ++i) {
    double vx = 0.0;
    if (G.drift_norm() > 0.0) {
      const Eigen::Vector2d x = work.coords(i);
      for (int d = 0; d < g.dim; ++d) vx += G.drift[d] * x[d];
    }
    work.values[i] *= std::exp(0.5 * vx);
    conj_peak = std::max(conj_peak, std::abs(work.values[i]));
  }
  if (conj_peak > conjugation_guard * peak)
    throw UnstableConjugation("chi^{1/2} g exceeds the dynamic-range guard");

  const Index n = g.axis.size();
  fft_axis(work.values, n, false, g.dim);
  const Index mmax = g.axis.max_mode();
  auto mode_frequency = [&](Index raw) {
    Index k = raw;
    if (k > mmax) k -= n;
    return g.axis.frequency(k);
  };
  if (g.dim == 1) {
    for (Index i = 0; i < n; ++i)
      work.values[i] *= M.at(std::abs(mode_frequency(i)));
  } else {
    for (Index a = 0; a < n; ++a) {
      const double xa = mode_frequency(a);
      for (Index b = 0; b < n; ++b)
        work.values[a * n + b] *= M.at(std::hypot(xa, mode_frequency(b)));
    }
  }
  fft_axis(work.values, n, true, g.dim);

  for (Index i = 0; i < work.cells(); ++i) {
    double vx = 0.0;
    if (G.drift_norm() > 0.0) {
      const Eigen::Vector2d x = work.coords(i);
      for (int d = 0; d < g.dim; ++d) vx += G.drift[d] * x[d];
    }
    work.values[i] *= std::exp(-0.5 * vx);
  }
  return work;
}

}  // namespace stripcalc
