#include "bnls/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bnls/fft.hpp"

namespace bnls {
namespace {

const double kPi = 3.14159265358979323846;

// Relative spectral mass with any axis index outside the band that survives
// scaling frequencies by sqrt(s) (s > 1 pushes content past Nyquist).
double frequency_tail_fraction(const Field& uh, double band_shrink) {
  const Grid& g = uh.grid();
  const double cutoff = g.nyquist() * band_shrink;
  double tail = 0.0, total = 0.0;
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    const double a = std::norm(uh.values()[flat]);
    total += a;
    g.unflatten(flat, idx);
    for (int d = 0; d < g.dim(); ++d) {
      const double xi = g.xi(idx[d]);
      if (std::abs(xi) > cutoff) {
        tail += a;
        break;
      }
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

double physical_tail_fraction(const Field& up, double support_shrink) {
  const Grid& g = up.grid();
  const double cutoff = g.half_length() * support_shrink;
  double tail = 0.0, total = 0.0;
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    const double a = std::norm(up.values()[flat]);
    total += a;
    g.unflatten(flat, idx);
    for (int d = 0; d < g.dim(); ++d) {
      if (std::abs(g.x(idx[d])) > cutoff) {
        tail += a;
        break;
      }
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

// Reorders every axis between FFT natural order and ascending-frequency
// order. The map t = (k + M/2) mod M is its own inverse for even M.
std::vector<cplx> fftshift_all_axes(const Grid& g,
                                    std::span<const cplx> values) {
  const int m = g.m();
  std::vector<cplx> out(values.size());
  int idx[4];
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    g.unflatten(flat, idx);
    std::size_t src = 0;
    for (int d = 0; d < g.dim(); ++d) {
      const int k = (idx[d] + m / 2) % m;
      src = src * static_cast<std::size_t>(m) + static_cast<std::size_t>(k);
    }
    out[flat] = values[src];
  }
  return out;
}

// Applies, along one axis of the cube, the scaled line transform
//   out_q = PostPhase(q) * sum_p in_p * PrePhase(p) * e^{i alpha p q}.
void transform_axis(const Grid& g, std::vector<cplx>& data, int axis,
                    double alpha, const std::vector<cplx>& pre,
                    const std::vector<cplx>& post) {
  const int m = g.m();
  const int dim = g.dim();
  std::size_t stride = 1;
  for (int d = dim - 1; d > axis; --d) stride *= static_cast<std::size_t>(m);
  const std::size_t block = stride * static_cast<std::size_t>(m);
  const std::size_t nlines = g.size() / static_cast<std::size_t>(m);

  std::vector<cplx> line(static_cast<std::size_t>(m));
  std::vector<cplx> out(static_cast<std::size_t>(m));
  for (std::size_t l = 0; l < nlines; ++l) {
    const std::size_t base = (l / stride) * block + (l % stride);
    for (int p = 0; p < m; ++p)
      line[static_cast<std::size_t>(p)] =
          data[base + static_cast<std::size_t>(p) * stride] *
          pre[static_cast<std::size_t>(p)];
    detail::fractional_dft(static_cast<std::size_t>(m), line.data(),
                           out.data(), alpha);
    for (int q = 0; q < m; ++q)
      data[base + static_cast<std::size_t>(q) * stride] =
          out[static_cast<std::size_t>(q)] * post[static_cast<std::size_t>(q)];
  }
}

cplx unit_phase(long double arg) {
  return cplx(static_cast<double>(std::cos(arg)),
              static_cast<double>(std::sin(arg)));
}

}  // namespace

EnergyBreakdown energy(const PhysicsParams& params, const Field& u) {
  const NormTriple n = norms(u);
  const double p = 2.0 * params.sigma + 2.0;
  const double nl = lp_norm_pow(u, p);

  EnergyBreakdown bd;
  bd.mass = n.mass;
  bd.lap_term = 0.5 * params.gamma * n.lap_sq;
  bd.grad_term = 0.5 * params.beta * n.grad_sq;
  bd.nonlinear_term = params.alpha / p * nl;
  bd.E = bd.lap_term - bd.grad_term - bd.nonlinear_term;
  bd.I = bd.lap_term - bd.grad_term;
  if (params.normalized()) {
    // ||(lap + 1)u||^2 - nonlinear; identical to E + mass when gamma=2, beta=4
    bd.Phi = (n.lap_sq - 2.0 * n.grad_sq + n.mass) - bd.nonlinear_term;
  } else {
    bd.Phi = bd.E + params.margin_scale() * n.mass;
  }
  return bd;
}

double energy_along_dilation(const PhysicsParams& params,
                             const EnergyBreakdown& at_one, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dilation: s must be > 0");
  return s * s * at_one.lap_term - s * at_one.grad_term -
         std::pow(s, 0.5 * params.sigma * params.dim) * at_one.nonlinear_term;
}

Field dilate(const Field& u, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dilate: s must be > 0");
  const Grid& g = u.grid();
  const GridPtr gp = u.grid_ptr();
  const int m = g.m();
  const int dim = g.dim();
  if (s == 1.0) return u;

  const double root = std::sqrt(s);
  const double tail_tol = 1e-8;

  if (s > 1.0) {
    // Compression in x: evaluate u_hat at xi/sqrt(s), which stays interior on
    // the frequency side. Content already beyond Nyquist/sqrt(s) would fold.
    const Field uh = to_frequency(u);
    if (frequency_tail_fraction(uh, 1.0 / root) > tail_tol)
      throw std::domain_error(
          "dilate: unrepresentable (spectral tail beyond Nyquist after "
          "rescaling exceeds 1e-8 of the mass)");
    const Field up = to_physical(u);
    std::vector<cplx> data(up.values().begin(), up.values().end());

    // u_s_hat(xi_t) = s^{-N/4} h^N sum_j u_j e^{-i (xi_t/sqrt(s)) x_j}
    const double c = 1.0 / root;
    const long double cpi = static_cast<long double>(c) * kPi;
    const double alpha = -2.0 * kPi * c / m;
    std::vector<cplx> pre(static_cast<std::size_t>(m)),
        post(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
      pre[static_cast<std::size_t>(j)] = unit_phase(-cpi * (m / 2 - j));
    for (int t = 0; t < m; ++t)
      post[static_cast<std::size_t>(t)] = unit_phase(cpi * t);
    for (int d = 0; d < dim; ++d) transform_axis(g, data, d, alpha, pre, post);

    const double factor =
        std::pow(s, -0.25 * dim) * std::pow(g.dx(), dim);
    for (auto& v : data) v *= factor;
    // axes are now in ascending-frequency order; restore natural order
    std::vector<cplx> natural = fftshift_all_axes(g, data);
    return Field(gp, Rep::frequency, std::move(natural));
  }

  // s < 1: expansion in x. Evaluate the interpolant at sqrt(s) x_j (interior),
  // valid when the support that leaves the window carries negligible mass.
  const Field up = to_physical(u);
  if (physical_tail_fraction(up, root) > tail_tol)
    throw std::domain_error(
        "dilate: unrepresentable (physical tail beyond the rescaled support "
        "window exceeds 1e-8 of the mass)");
  const Field uh = to_frequency(u);
  std::vector<cplx> data = fftshift_all_axes(g, uh.values());

  // u_s(x_j) = s^{N/4} (2L)^{-N} sum_t u_hat_t e^{i sqrt(s) xi_t x_j}
  const long double rpi = static_cast<long double>(root) * kPi;
  const double alpha = 2.0 * kPi * root / m;
  std::vector<cplx> pre(static_cast<std::size_t>(m)),
      post(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t)
    pre[static_cast<std::size_t>(t)] = unit_phase(-rpi * t);
  for (int j = 0; j < m; ++j)
    post[static_cast<std::size_t>(j)] = unit_phase(rpi * (m / 2 - j));
  for (int d = 0; d < dim; ++d) transform_axis(g, data, d, alpha, pre, post);

  const double factor =
      std::pow(s, 0.25 * dim) / std::pow(2.0 * g.half_length(), dim);
  for (auto& v : data) v *= factor;
  return Field(gp, Rep::physical, std::move(data));
}

Field amplitude_scale(const Field& u, double tau) {
  if (!(tau > 0.0))
    throw std::invalid_argument("amplitude_scale: tau must be > 0");
  return scaled(u, std::sqrt(tau));
}

double rayleigh_quotient(const Field& u) {
  const NormTriple n = norms(u);
  if (n.mass <= 0.0)
    throw std::invalid_argument("rayleigh_quotient: zero field");
  if (n.lap_sq == 0.0) return 0.0;  // constants: grad vanishes as well
  return n.grad_sq * n.grad_sq / (n.lap_sq * n.mass);
}

double lagrange_multiplier(const PhysicsParams& params,
                           const EnergyBreakdown& bd) {
  if (bd.mass <= 0.0)
    throw std::invalid_argument("lagrange_multiplier: zero mass");
  const double p = 2.0 * params.sigma + 2.0;
  return -(2.0 * bd.lap_term - 2.0 * bd.grad_term - p * bd.nonlinear_term) /
         bd.mass;
}

double lagrange_multiplier(const PhysicsParams& params, const Field& u) {
  return lagrange_multiplier(params, energy(params, u));
}

double pohozaev_residual(const PhysicsParams& params,
                         const EnergyBreakdown& bd) {
  if (bd.mass <= 0.0)
    throw std::invalid_argument("pohozaev_residual: zero field");
  const double lap = 2.0 * bd.lap_term;  // gamma ||lap u||^2
  const double sn = params.sigma * params.dim;
  const double balance =
      lap - bd.grad_term - 0.5 * sn * bd.nonlinear_term;
  if (lap == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(balance) / lap;
}

double pohozaev_residual(const PhysicsParams& params, const Field& u) {
  return pohozaev_residual(params, energy(params, u));
}

double shell_concentration(const PhysicsParams& params, const Field& u) {
  const Field uh = to_frequency(u);
  const Grid& g = uh.grid();
  const auto& xi2 = g.xi_sq();
  const double shell = params.shell_xi_sq();
  double acc = 0.0, mass = 0.0;
  const auto v = uh.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::norm(v[i]);
    const double d = xi2[i] - shell;
    acc += d * d * a;
    mass += a;
  }
  if (mass <= 0.0)
    throw std::invalid_argument("shell_concentration: zero field");
  return acc / mass;
}

Field fourier_symmetrize(const Field& u) {
  Field uh = to_frequency(u);
  for (auto& v : uh.raw()) v = cplx(std::abs(v), 0.0);
  return to_physical(uh);
}

}  // namespace bnls
