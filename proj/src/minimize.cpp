#include "bnls/minimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bnls/families.hpp"
#include "bnls/fft.hpp"

namespace bnls {
namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 6.28318530717958647692;

struct Workspace {
  const PhysicsParams& params;
  const Grid& grid;
  double c;
  double freq_weight;  // (2 pi)^-N (pi/L)^N
  double p;            // 2 sigma + 2

  std::vector<cplx> uh;    // frequency coefficients
  std::vector<cplx> up;    // physical samples
  EnergyBreakdown bd;

  Workspace(const PhysicsParams& pr, const Grid& g, double c_)
      : params(pr), grid(g), c(c_),
        freq_weight(g.freq_cell_volume() / std::pow(kTwoPi, g.dim())),
        p(2.0 * pr.sigma + 2.0), uh(g.size()), up(g.size()) {}

  void sync_from_frequency() {
    const auto& sign = grid.center_sign();
    std::vector<cplx> tmp(uh.size());
    for (std::size_t i = 0; i < uh.size(); ++i) tmp[i] = uh[i] * sign[i];
    detail::dft(grid.dim(), grid.m(), tmp.data(), up.data(), +1);
    const double w = 1.0 / std::pow(2.0 * grid.half_length(), grid.dim());
    for (auto& v : up) v *= w;
  }

  void eval_energy() {
    const auto& xi2 = grid.xi_sq();
    double m = 0.0, gr = 0.0, la = 0.0;
    for (std::size_t i = 0; i < uh.size(); ++i) {
      const double a = std::norm(uh[i]);
      m += a;
      gr += xi2[i] * a;
      la += xi2[i] * xi2[i] * a;
    }
    m *= freq_weight;
    gr *= freq_weight;
    la *= freq_weight;
    double nl = 0.0;
    for (const auto& v : up) nl += std::pow(std::abs(v), p);
    nl *= grid.cell_volume();

    bd.mass = m;
    bd.lap_term = 0.5 * params.gamma * la;
    bd.grad_term = 0.5 * params.beta * gr;
    bd.nonlinear_term = params.alpha / p * nl;
    bd.E = bd.lap_term - bd.grad_term - bd.nonlinear_term;
    bd.I = bd.lap_term - bd.grad_term;
    bd.Phi = bd.E + params.margin_scale() * bd.mass;
  }

  double inner_freq(const std::vector<cplx>& a,
                    const std::vector<cplx>& b) const {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s * freq_weight;
  }
};

// Shell-modulated Gaussian wave packet at the lattice frequency nearest
// sqrt(beta / 2 gamma) e_1; the widths follow the tau parametrization of the
// Gaussian test family.
Field modulated_gaussian(const PhysicsParams& params, const GridPtr& grid,
                         double c, double tau) {
  const Grid& g = *grid;
  const double L = g.half_length();
  const double xi_star = std::sqrt(params.shell_xi_sq());
  long k = std::lround(xi_star * L / kPi);
  k = std::min<long>(k, g.m() / 2 - 2);
  const double xi_lat = kPi * static_cast<double>(k) / L;

  const double t4 = tau * tau * tau * tau;
  const double t2 = tau * tau;
  std::vector<cplx> vals(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    const double x1 = g.x(idx[0]);
    double expo = t4 * x1 * x1;
    for (int d = 1; d < g.dim(); ++d) {
      const double xd = g.x(idx[d]);
      expo += t2 * xd * xd;
    }
    const double env = std::exp(-0.5 * expo);
    vals[flat] = cplx(env * std::cos(xi_lat * x1), env * std::sin(xi_lat * x1));
  }
  Field f(grid, Rep::physical, std::move(vals));
  return scaled(f, std::sqrt(c / mass_physical(f)));
}

Field build_initial(const PhysicsParams& params, const GridPtr& grid, double c,
                    const SolveOptions& opts, const Field* provided) {
  switch (opts.init) {
    case InitStrategy::provided: {
      if (!provided)
        throw std::invalid_argument("minimize: init=provided without a field");
      const double m0 = norms(*provided).mass;
      if (m0 <= 0.0)
        throw std::invalid_argument("minimize: provided field has zero mass");
      return scaled(*provided, std::sqrt(c / m0));
    }
    case InitStrategy::random:
      return random_field(grid, opts.seed, c);
    case InitStrategy::bessel_m_opt: {
      if (grid->dim() < 2)
        return modulated_gaussian(params, grid, c, 0.5);
      Field best(grid, Rep::physical);
      double best_e = 0.0;
      bool have = false;
      for (int m = 1; 2.0 * m + 2.0 <= grid->half_length(); m *= 2) {
        Field trial = bessel_family(params, c, m, grid);
        const double e = energy(params, trial).E;
        if (!have || e < best_e) {
          best = trial;
          best_e = e;
          have = true;
        }
      }
      if (!have) return modulated_gaussian(params, grid, c, 0.5);
      return best;
    }
    case InitStrategy::gaussian_tau_opt:
    default: {
      const double L = grid->half_length();
      Field best(grid, Rep::physical);
      double best_e = 0.0;
      bool have = false;
      for (double tau = 1.0; tau * tau * L >= 4.5 && tau * L >= 4.5;
           tau *= 0.5) {
        if (grid->nyquist() < std::sqrt(params.shell_xi_sq()) + 8.0 * tau * tau)
          continue;
        Field trial = modulated_gaussian(params, grid, c, tau);
        const double e = energy(params, trial).E;
        if (!have || e < best_e) {
          best = trial;
          best_e = e;
          have = true;
        }
      }
      if (!have)
        throw std::invalid_argument(
            "minimize: grid cannot resolve any Gaussian initial width");
      return best;
    }
  }
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::minimizer_found: return "minimizer_found";
    case Classification::vanishing_suspected: return "vanishing_suspected";
    default: return "not_converged";
  }
}

const char* to_string(InitStrategy s) {
  switch (s) {
    case InitStrategy::gaussian_tau_opt: return "gaussian_tau_opt";
    case InitStrategy::bessel_m_opt: return "bessel_m_opt";
    case InitStrategy::random: return "random";
    default: return "provided";
  }
}

double effective_tol_margin(const PhysicsParams& params, double c,
                            const SolveOptions& opts) {
  return opts.tol_margin > 0.0 ? opts.tol_margin
                               : 1e-4 * params.margin_scale() * c;
}

double localization_fraction(const Field& u, double radius) {
  const Field up = to_physical(u);
  const Grid& g = up.grid();
  std::vector<cplx> density(g.size()), ball(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    density[flat] = cplx(std::norm(up.values()[flat]), 0.0);
    g.unflatten(flat, idx);
    double r2 = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      const double xd = g.x(idx[d]);
      r2 += xd * xd;
    }
    ball[flat] = cplx(r2 <= radius * radius ? 1.0 : 0.0, 0.0);
  }
  // circular convolution density * ball, maximum over centers
  std::vector<cplx> dh(g.size()), bh(g.size());
  detail::dft(g.dim(), g.m(), density.data(), dh.data(), -1);
  detail::dft(g.dim(), g.m(), ball.data(), bh.data(), -1);
  for (std::size_t i = 0; i < dh.size(); ++i) dh[i] *= bh[i];
  detail::dft(g.dim(), g.m(), dh.data(), density.data(), +1);
  double best = 0.0, total = 0.0;
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    best = std::max(best, density[i].real() * inv_n);
    total += std::norm(up.values()[i]);
  }
  return total > 0.0 ? best / total : 0.0;
}

MinimizeResult minimize_on_sphere(const PhysicsParams& params,
                                  const GridPtr& grid, double c,
                                  const SolveOptions& opts,
                                  const Field* initial) {
  if (!(c > 0.0)) throw std::invalid_argument("minimize: c must be > 0");
  if (params.dim != grid->dim())
    throw std::invalid_argument("minimize: params/grid dim mismatch");
  if (params.regime == Regime::critical) {
    if (!(opts.critical_mass_bound > 0.0))
      throw std::invalid_argument(
          "invalid_regime: critical sigma N = 4 requires a declared critical "
          "mass bound c*_N");
    // delta = 0.1 safety band below the estimated threshold
    if (c > 0.9 * opts.critical_mass_bound)
      throw std::invalid_argument(
          "invalid_regime: c exceeds 0.9 of the declared critical mass c*_N "
          "(E is unbounded below at and beyond c*_N)");
  }

  const Grid& g = *grid;
  Workspace ws(params, g, c);

  {
    Field u0 = build_initial(params, grid, c, opts, initial);
    Field u0h = to_frequency(u0);
    const double m0 = norms(u0h).mass;
    Field u0n = scaled(u0h, std::sqrt(c / m0));
    ws.uh.assign(u0n.values().begin(), u0n.values().end());
    ws.sync_from_frequency();
    ws.eval_energy();
  }

  const auto& xi2 = g.xi_sq();
  const double floor_shift =
      -params.quadratic_floor() * (1.0 + 1e-6);  // beta^2/(4 gamma) (1+eps)
  const double sn = params.sigma;

  std::vector<cplx> nl(g.size()), nlh(g.size()), dir(g.size()),
      trial_h(g.size()), tmp(g.size());
  MinimizeReport rep;
  rep.c = c;
  if (opts.record_energy_trace) rep.energy_trace.push_back(ws.bd.E);

  double h = opts.step_size;
  const double h_floor = opts.step_size * 1e-14;
  bool converged = false;
  double grad_norm = 0.0;
  int iter = 0;

  const auto& sign = g.center_sign();
  const double fwd_weight = g.cell_volume();

  for (; iter < opts.max_iterations; ++iter) {
    // nonlinear term |u|^{2 sigma} u in physical space, then to frequency
    for (std::size_t i = 0; i < nl.size(); ++i) {
      const double a2 = std::norm(ws.up[i]);
      nl[i] = ws.up[i] * std::pow(a2, sn);
    }
    detail::dft(g.dim(), g.m(), nl.data(), nlh.data(), -1);
    for (std::size_t i = 0; i < nlh.size(); ++i)
      nlh[i] *= fwd_weight * sign[i];
    if (opts.dealias) {
      const int m = g.m();
      const int cut = m / 3;
      int idx[4];
      for (std::size_t flat = 0; flat < nlh.size(); ++flat) {
        g.unflatten(flat, idx);
        for (int d = 0; d < g.dim(); ++d) {
          const int k = idx[d] < m / 2 ? idx[d] : idx[d] - m;
          if (std::abs(k) > cut) {
            nlh[flat] = cplx{};
            break;
          }
        }
      }
    }

    // gradient of E and its preconditioned image
    const double shift =
        std::max(lagrange_multiplier(params, ws.bd), floor_shift);
    for (std::size_t i = 0; i < dir.size(); ++i) {
      const double quad = params.gamma * xi2[i] * xi2[i] -
                          params.beta * xi2[i];
      const cplx grad = quad * ws.uh[i] - params.alpha * nlh[i];
      if (opts.preconditioner == Preconditioner::biharmonic) {
        dir[i] = grad / (quad + shift);
      } else {
        dir[i] = grad;
      }
    }
    // project onto the tangent space of S(c)
    const double radial = ws.inner_freq(dir, ws.uh) / c;
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] -= radial * ws.uh[i];
    grad_norm = std::sqrt(ws.inner_freq(dir, dir));
    if (grad_norm < opts.tol_gradient) {
      converged = true;
      break;
    }

    // backtracking step with renormalization
    const double e_old = ws.bd.E;
    bool accepted = false;
    while (h >= h_floor) {
      for (std::size_t i = 0; i < trial_h.size(); ++i)
        trial_h[i] = ws.uh[i] - h * dir[i];
      double m_trial = 0.0;
      for (const auto& v : trial_h) m_trial += std::norm(v);
      m_trial *= ws.freq_weight;
      const double rescale = std::sqrt(c / m_trial);
      for (auto& v : trial_h) v *= rescale;

      std::swap(ws.uh, trial_h);
      ws.sync_from_frequency();
      ws.eval_energy();
      if (ws.bd.E <= e_old + 1e-12) {
        accepted = true;
        break;
      }
      std::swap(ws.uh, trial_h);  // reject, restore
      h *= 0.5;
    }
    if (!accepted) {
      ws.sync_from_frequency();
      ws.eval_energy();
      break;  // step collapsed; leave convergence to the gradient test
    }
    if (opts.record_energy_trace) rep.energy_trace.push_back(ws.bd.E);
    h = std::min(h * 1.25, opts.step_size * 4.0);
  }

  Field state(grid, Rep::frequency,
              std::vector<cplx>(ws.uh.begin(), ws.uh.end()));
  Field state_phys = to_physical(state);

  rep.iterations = iter;
  rep.converged = converged;
  rep.grad_norm = grad_norm;
  rep.m_hat = ws.bd.E;
  rep.margin = rep.m_hat + params.margin_scale() * c;
  rep.lambda_hat = lagrange_multiplier(params, ws.bd);
  rep.pohozaev_residual = pohozaev_residual(params, ws.bd);
  rep.shell_concentration = shell_concentration(params, state);
  rep.ratio_lap = std::sqrt(ws.bd.lap_sq(params.gamma) / ws.bd.mass);
  rep.ratio_grad = std::sqrt(ws.bd.grad_sq(params.beta) / ws.bd.mass);
  rep.localization = localization_fraction(
      state_phys, opts.localization_radius_fraction * g.half_length());

  const double tol_margin = effective_tol_margin(params, c, opts);
  if (!converged) {
    rep.classification = Classification::not_converged;
  } else if (rep.margin < -tol_margin) {
    rep.classification = Classification::minimizer_found;
  } else if (rep.localization < 0.5) {
    rep.classification = Classification::vanishing_suspected;
  } else {
    // margin-hugging but localized: cannot certify either way
    rep.classification = Classification::not_converged;
  }

  return MinimizeResult{std::move(rep), std::move(state_phys)};
}

ScanRecord classify_existence(const PhysicsParams& params, const GridPtr& grid,
                              double c, const SolveOptions& opts) {
  std::vector<InitStrategy> starts = {InitStrategy::gaussian_tau_opt};
  if (grid->dim() >= 2) starts.push_back(InitStrategy::bessel_m_opt);
  starts.push_back(InitStrategy::random);

  std::optional<MinimizeReport> best;
  for (InitStrategy s : starts) {
    SolveOptions o = opts;
    o.init = s;
    MinimizeResult r = minimize_on_sphere(params, grid, c, o);
    if (!best || r.report.m_hat < best->m_hat - 1e-10 ||
        (std::abs(r.report.m_hat - best->m_hat) <= 1e-10 &&
         r.report.iterations < best->iterations)) {
      best = r.report;
    }
  }

  ScanRecord rec;
  rec.sigma = params.sigma;
  rec.c = c;
  rec.margin = best->margin;
  rec.m_hat = best->m_hat;
  rec.classification = best->classification;
  rec.iterations = best->iterations;
  return rec;
}

ScanSummary scan(const PhysicsParams& params_template, const GridPtr& grid,
                 const std::vector<double>& sigma_list,
                 const std::vector<double>& c_list, const SolveOptions& opts,
                 int threads) {
  struct Job {
    double sigma, c;
    std::size_t index;
  };
  std::vector<Job> jobs;
  for (double s : sigma_list)
    for (double c : c_list) jobs.push_back({s, c, jobs.size()});

  std::vector<ScanRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      ScanRecord rec;
      rec.sigma = job.sigma;
      rec.c = job.c;
      try {
        PhysicsParams p = params_template;
        p.sigma = job.sigma;
        p.validate();
        SolveOptions o = opts;
        o.seed = opts.seed ^ (0x9E3779B97F4A7C15ull * (job.index + 1));
        rec = classify_existence(p, grid, job.c, o);
      } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
        rec.classification = Classification::not_converged;
      }
      records[job.index] = rec;
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(records.begin(), records.end(),
            [](const ScanRecord& a, const ScanRecord& b) {
              if (a.sigma != b.sigma) return a.sigma < b.sigma;
              return a.c < b.c;
            });

  ScanSummary summary;
  summary.records = std::move(records);
  for (const ScanRecord& r : summary.records) {
    if (!r.ok) continue;
    if (r.classification == Classification::minimizer_found) {
      if (!summary.c0_estimate || r.c < *summary.c0_estimate)
        summary.c0_estimate = r.c;
    }
  }
  return summary;
}

}  // namespace bnls
