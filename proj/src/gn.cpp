#include "bnls/gn.hpp"

#include <cmath>
#include <stdexcept>

#include "bnls/fft.hpp"
#include "bnls/functionals.hpp"

namespace bnls {
namespace {

const double kTwoPi = 6.28318530717958647692;

void check_sigma(double sigma, int dim) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("gn: sigma must be > 0");
  if (dim < 1 || dim > 4)
    throw std::invalid_argument("gn: unsupported dimension");
}

}  // namespace

double weinstein_quotient(double sigma, const Field& u) {
  const NormTriple n = norms(u);
  if (n.mass <= 0.0)
    throw std::invalid_argument("weinstein_quotient: zero field");
  const int dim = u.grid().dim();
  const double p = 2.0 * sigma + 2.0;
  const double a = lp_norm_pow(u, p);
  const double e1 = 0.25 * sigma * dim;                 // exponent on ||lap||^2
  const double e2 = 0.5 * (2.0 + 2.0 * sigma) - e1;     // exponent on ||u||^2
  return a / (std::pow(n.lap_sq, e1) * std::pow(n.mass, e2));
}

GNResult weinstein_ascent(double sigma, int dim, const Field& start,
                          const SolveOptions& opts) {
  check_sigma(sigma, dim);
  const GridPtr grid = start.grid_ptr();
  const Grid& g = *grid;
  if (g.dim() != dim)
    throw std::invalid_argument("weinstein_ascent: grid dim mismatch");

  const double p = 2.0 * sigma + 2.0;
  const double freq_weight = g.freq_cell_volume() / std::pow(kTwoPi, g.dim());
  const auto& xi2 = g.xi_sq();
  const auto& sign = g.center_sign();
  const double fwd_weight = g.cell_volume();
  const double inv_box = 1.0 / std::pow(2.0 * g.half_length(), g.dim());

  // state: frequency coefficients, mass kept at 1
  std::vector<cplx> uh;
  {
    Field s0 = to_frequency(start);
    const double m0 = norms(s0).mass;
    if (m0 <= 0.0) throw std::invalid_argument("weinstein_ascent: zero start");
    Field s1 = scaled(s0, std::sqrt(1.0 / m0));
    uh.assign(s1.values().begin(), s1.values().end());
  }

  std::vector<cplx> up(g.size()), nl(g.size()), nlh(g.size()), dir(g.size()),
      trial(g.size());

  auto sync_physical = [&](const std::vector<cplx>& hat) {
    for (std::size_t i = 0; i < hat.size(); ++i) nl[i] = hat[i] * sign[i];
    detail::dft(g.dim(), g.m(), nl.data(), up.data(), +1);
    for (auto& v : up) v *= inv_box;
  };

  auto quotient = [&](const std::vector<cplx>& hat) {
    double mass = 0.0, lap = 0.0;
    for (std::size_t i = 0; i < hat.size(); ++i) {
      const double a = std::norm(hat[i]);
      mass += a;
      lap += xi2[i] * xi2[i] * a;
    }
    mass *= freq_weight;
    lap *= freq_weight;
    double a = 0.0;
    for (const auto& v : up) a += std::pow(std::abs(v), p);
    a *= g.cell_volume();
    const double e1 = 0.25 * sigma * dim;
    const double e2 = 0.5 * p - e1;
    struct {
      double w, mass, lap, lppow;
    } r{a / (std::pow(lap, e1) * std::pow(mass, e2)), mass, lap, a};
    return r;
  };

  sync_physical(uh);
  auto cur = quotient(uh);

  double h = opts.step_size;
  int stalled = 0;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    // gradient of log W
    for (std::size_t i = 0; i < nl.size(); ++i) {
      const double a2 = std::norm(up[i]);
      nl[i] = up[i] * std::pow(a2, sigma);
    }
    detail::dft(g.dim(), g.m(), nl.data(), nlh.data(), -1);
    for (std::size_t i = 0; i < nlh.size(); ++i)
      nlh[i] *= fwd_weight * sign[i];

    const double ca = p / cur.lppow;
    const double cd = 0.5 * sigma * dim / cur.lap;
    const double cm = (2.0 + 2.0 * sigma - 0.5 * sigma * dim) / cur.mass;
    for (std::size_t i = 0; i < dir.size(); ++i) {
      const cplx grad =
          ca * nlh[i] - cd * xi2[i] * xi2[i] * uh[i] - cm * uh[i];
      dir[i] = grad / (xi2[i] * xi2[i] + 1.0);
    }

    bool accepted = false;
    while (h > 1e-14 * opts.step_size) {
      for (std::size_t i = 0; i < trial.size(); ++i)
        trial[i] = uh[i] + h * dir[i];
      double mass = 0.0;
      for (const auto& v : trial) mass += std::norm(v);
      mass *= freq_weight;
      const double rescale = std::sqrt(1.0 / mass);
      for (auto& v : trial) v *= rescale;
      std::swap(uh, trial);
      sync_physical(uh);
      auto next = quotient(uh);
      if (next.w >= cur.w) {
        const double rel = (next.w - cur.w) / std::max(next.w, 1e-300);
        cur = next;
        accepted = true;
        stalled = rel < 1e-13 ? stalled + 1 : 0;
        break;
      }
      std::swap(uh, trial);
      h *= 0.5;
    }
    if (!accepted || stalled > 8) break;
    h = std::min(h * 1.3, opts.step_size * 4.0);
  }
  sync_physical(uh);

  GNResult result{GNReport{sigma, dim, cur.w, 0.0, 0.0},
                  Field(grid, Rep::frequency, std::move(uh))};
  if (std::abs(sigma * dim - 4.0) <= 1e-12) {
    const PhysicsParams normalized(2.0, 4.0, 1.0, sigma, dim);
    const GNReport full = critical_mass(normalized, cur.w);
    result.report.C_N = full.C_N;
    // c_star depends on gamma/alpha; leave the normalized-value here
    result.report.c_star = full.c_star;
  }
  return result;
}

GNResult estimate_bn(double sigma, int dim, const GridPtr& grid,
                     const SolveOptions& opts) {
  check_sigma(sigma, dim);
  std::vector<Field> starts;
  {
    // smooth localized start plus a couple of random draws
    const Grid& g = *grid;
    std::vector<cplx> vals(g.size());
    int idx[4];
    for (std::size_t flat = 0; flat < g.size(); ++flat) {
      g.unflatten(flat, idx);
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double xd = g.x(idx[d]);
        r2 += xd * xd;
      }
      vals[flat] = cplx(std::exp(-0.5 * r2), 0.0);
    }
    starts.emplace_back(grid, Rep::physical, std::move(vals));
    starts.push_back(random_field(grid, opts.seed, 1.0));
    starts.push_back(random_field(grid, opts.seed + 101, 1.0));
  }

  GNResult best = weinstein_ascent(sigma, dim, starts[0], opts);
  for (std::size_t i = 1; i < starts.size(); ++i) {
    GNResult r = weinstein_ascent(sigma, dim, starts[i], opts);
    if (r.report.B_N > best.report.B_N) best = std::move(r);
  }
  return best;
}

GNReport critical_mass(const PhysicsParams& params, double b_n) {
  if (params.regime != Regime::critical)
    throw std::invalid_argument("critical_mass: requires sigma N = 4");
  if (!(b_n > 0.0))
    throw std::invalid_argument("critical_mass: B_N must be positive");
  GNReport rep;
  rep.sigma = params.sigma;
  rep.dim = params.dim;
  rep.B_N = b_n;
  rep.C_N = (params.dim + 4.0) / (params.dim * b_n);
  rep.c_star =
      std::pow(params.gamma * rep.C_N / params.alpha, 0.25 * params.dim);
  return rep;
}

std::vector<double> unbounded_witness(const PhysicsParams& params, double c,
                                      const std::vector<double>& s_list,
                                      const Field& maximizer) {
  if (!(c > 0.0)) throw std::invalid_argument("unbounded_witness: c must be > 0");
  const NormTriple n = norms(maximizer);
  if (n.mass <= 0.0 || n.lap_sq <= 0.0)
    throw std::invalid_argument("unbounded_witness: degenerate maximizer");

  // Fix the ray gauge: rescale so ||lap U||_2 = ||U||_2, then put mass c.
  const double gauge = std::sqrt(n.mass / n.lap_sq);
  Field u = dilate(maximizer, gauge);
  u = scaled(u, std::sqrt(c / norms(u).mass));

  std::vector<double> energies;
  energies.reserve(s_list.size());
  for (double s : s_list) {
    const Field us = dilate(u, s);
    energies.push_back(energy(params, us).E);
  }
  return energies;
}

}  // namespace bnls
