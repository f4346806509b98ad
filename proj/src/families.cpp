#include "bnls/families.hpp"

#include <cmath>
#include <stdexcept>

#include "bnls/bessel.hpp"
#include "bnls/functionals.hpp"

namespace bnls {
namespace {

const double kPi = 3.14159265358979323846;

// C^4 smoothstep rising 0 -> 1 on [0, 1]; S'(u) = 630 u^4 (1-u)^4.
double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double u5 = u * u * u * u * u;
  return u5 * (126.0 + u * (-420.0 + u * (540.0 + u * (-315.0 + u * 70.0))));
}

double smoothstep_d1(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double a = u * (1.0 - u);
  return 630.0 * a * a * a * a;
}

double smoothstep_d2(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double a = u * (1.0 - u);
  return 2520.0 * a * a * a * (1.0 - 2.0 * u);
}

double surface_area(int dim) {  // |S^{N-1}|; 2 for N = 1
  return 2.0 * std::pow(kPi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

}  // namespace

FamilyBoundReport fit_bound(Family family,
                            const std::vector<double>& parameter_values,
                            const std::vector<double>& observed) {
  if (parameter_values.size() < 3)
    throw std::invalid_argument("fit_bound: need at least 3 parameter values");
  if (parameter_values.size() != observed.size())
    throw std::invalid_argument("fit_bound: length mismatch");
  for (std::size_t i = 0; i < parameter_values.size(); ++i) {
    if (i > 0 && !(parameter_values[i] > parameter_values[i - 1]))
      throw std::invalid_argument(
          "fit_bound: parameter values must be strictly increasing");
    if (!(observed[i] > 0.0))
      throw std::invalid_argument("fit_bound: observables must be positive");
  }

  const std::size_t n = parameter_values.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(parameter_values[i]);
    const double y = std::log(observed[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  FamilyBoundReport rep;
  rep.family = family;
  rep.parameter_values = parameter_values;
  rep.observed = observed;
  rep.fitted_slope = (n * sxy - sx * sy) / denom;
  rep.fitted_intercept = (sy - rep.fitted_slope * sx) / n;
  return rep;
}

double psi_profile(int dim, double r) {
  if (dim < 1) throw std::invalid_argument("psi_profile: dim must be >= 1");
  if (r < 0.0) throw std::invalid_argument("psi_profile: r must be >= 0");
  if (dim == 1) return std::sqrt(2.0 / kPi) * std::cos(r);
  const double nu = 0.5 * (dim - 2);
  if (r == 0.0) return std::pow(0.5, nu) / std::tgamma(nu + 1.0);
  return std::pow(r, -nu) * bessel_j(nu, r);
}

double psi_radial_derivative(int dim, double r) {
  if (dim < 1)
    throw std::invalid_argument("psi_radial_derivative: dim must be >= 1");
  if (dim == 1) return -std::sqrt(2.0 / kPi) * std::sin(r);
  if (r == 0.0) return 0.0;
  const double nu = 0.5 * (dim - 2);
  return -std::pow(r, -nu) * bessel_j(nu + 1.0, r);
}

double cutoff(double r) { return 1.0 - smoothstep(r - 1.0); }
double cutoff_derivative(double r) { return -smoothstep_d1(r - 1.0); }
double cutoff_second_derivative(double r) { return -smoothstep_d2(r - 1.0); }

Field gaussian_family(const PhysicsParams& params, double c, double tau,
                      const GridPtr& grid) {
  if (!params.normalized())
    throw std::invalid_argument(
        "gaussian_family: requires normalized parameters gamma=2, beta=4");
  if (!(c > 0.0) || !(tau > 0.0) || tau > 1.0)
    throw std::invalid_argument("gaussian_family: need c > 0, tau in (0,1]");
  if (params.dim != grid->dim())
    throw std::invalid_argument("gaussian_family: params/grid dim mismatch");

  const Grid& g = *grid;
  const double L = g.half_length();
  const int dim = g.dim();
  // Mass tails scale like exp(-(tau^2 L)^2) along x_1 and exp(-(tau L)^2)
  // transversally; the spectrum sits at xi_1 = 1 with width ~tau^2 (8 tau
  // transversally).
  if (tau * tau * L < 4.5 || tau * L < 4.5)
    throw std::domain_error(
        "gaussian_family: unresolvable (box too small for the tau^-2 or "
        "tau^-1 length scale)");
  if (g.nyquist() < 1.0 + 8.0 * tau * tau || g.nyquist() < 8.0 * tau)
    throw std::domain_error(
        "gaussian_family: unresolvable (Nyquist band too narrow)");

  const double amp =
      std::pow(kPi, -0.25 * dim) * std::sqrt(c) * std::pow(tau, 0.5 * (dim + 1));
  const double t4 = tau * tau * tau * tau;
  const double t2 = tau * tau;

  std::vector<cplx> vals(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    const double x1 = g.x(idx[0]);
    double expo = t4 * x1 * x1;
    for (int d = 1; d < dim; ++d) {
      const double xd = g.x(idx[d]);
      expo += t2 * xd * xd;
    }
    const double env = amp * std::exp(-0.5 * expo);
    vals[flat] = cplx(env * std::cos(x1), env * std::sin(x1));
  }
  return Field(grid, Rep::physical, std::move(vals));
}

double gaussian_nonlinear_closed(int dim, double sigma, double c, double tau) {
  return std::pow(kPi, -0.5 * sigma * dim) *
         std::pow(sigma + 1.0, -0.5 * dim) * std::pow(c, sigma + 1.0) *
         std::pow(tau, (dim + 1.0) * sigma);
}

double gaussian_quadratic_closed(int dim, double c, double tau) {
  // pi^{-N/2} c tau^4 int (tau^2 h1^2 + 2 h1 + h2^2 + ... + hN^2)^2 e^{-|h|^2}
  const double t2 = tau * tau;
  const double n1 = dim - 1.0;
  const double moment = 0.75 * t2 * t2 + 2.0 + 0.75 * n1 +
                        0.25 * n1 * (n1 - 1.0) + 0.5 * t2 * n1;
  return c * tau * tau * tau * tau * moment;
}

double gaussian_phi_closed(const PhysicsParams& params, double c, double tau) {
  const double nl = gaussian_nonlinear_closed(params.dim, params.sigma, c, tau);
  return gaussian_quadratic_closed(params.dim, c, tau) -
         params.alpha / (2.0 * params.sigma + 2.0) * nl;
}

Field bessel_family(const PhysicsParams& params, double c, int m,
                    const GridPtr& grid) {
  if (!(c > 0.0) || m < 1)
    throw std::invalid_argument("bessel_family: need c > 0 and m >= 1");
  const Grid& g = *grid;
  if (g.dim() < 2)
    throw std::invalid_argument("bessel_family: requires N >= 2");
  if (params.dim != g.dim())
    throw std::invalid_argument("bessel_family: params/grid dim mismatch");
  if (g.half_length() < 2.0 * m + 2.0)
    throw std::domain_error(
        "bessel_family: box_too_small (half_length < 2m + margin)");

  std::vector<cplx> vals(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    double r2 = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      const double xd = g.x(idx[d]);
      r2 += xd * xd;
    }
    const double r = std::sqrt(r2);
    const double phi_r = r >= 2.0 * m ? 0.0 : cutoff(r / m);
    vals[flat] = phi_r == 0.0 ? cplx{} : cplx(psi_profile(g.dim(), r) * phi_r, 0.0);
  }
  Field f(grid, Rep::physical, std::move(vals));
  const double m0 = mass_physical(f);
  if (m0 <= 0.0) throw std::runtime_error("bessel_family: degenerate profile");
  return scaled(f, std::sqrt(c / m0));
}

BesselFamilyNorms bessel_radial_norms(int dim, double sigma, int m) {
  if (dim < 1 || m < 1)
    throw std::invalid_argument("bessel_radial_norms: dim >= 1, m >= 1");
  const double area = surface_area(dim);
  const double rmax = 2.0 * m;
  // Simpson rule; the integrands oscillate on the pi scale.
  const std::size_t steps = 2 * static_cast<std::size_t>(rmax / 0.01 / 2 + 1);
  const double h = rmax / static_cast<double>(steps);

  double acc_mass = 0.0, acc_res = 0.0, acc_lp = 0.0;
  const double p = 2.0 * sigma + 2.0;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double r = h * static_cast<double>(i);
    const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double rpow = std::pow(r, dim - 1);
    const double phi_r = cutoff(r / m);
    const double psi_r = psi_profile(dim, r);
    const double pm = psi_r * phi_r;
    acc_mass += w * pm * pm * rpow;
    acc_lp += w * std::pow(std::abs(pm), p) * rpow;
    if (r >= m && r <= rmax) {
      // (lap + 1) psi_m = m^-2 (lap cutoff)(r/m) psi + 2 m^-1 cutoff'(r/m) psi'
      const double y = r / m;
      const double lap_phi =
          cutoff_second_derivative(y) +
          (dim - 1.0) / y * cutoff_derivative(y);
      const double res = lap_phi * psi_r / (static_cast<double>(m) * m) +
                         2.0 / m * cutoff_derivative(y) *
                             psi_radial_derivative(dim, r);
      acc_res += w * res * res * rpow;
    }
  }
  const double scale = area * h / 3.0;
  return BesselFamilyNorms{acc_mass * scale, acc_res * scale, acc_lp * scale};
}

double bessel_phi_radial(const PhysicsParams& params, double c, int m) {
  const BesselFamilyNorms n = bessel_radial_norms(params.dim, params.sigma, m);
  const double p = 2.0 * params.sigma + 2.0;
  return c / n.mass_sq * n.lap_plus_one_sq -
         params.alpha / p * std::pow(c, params.sigma + 1.0) * n.lp_pow /
             std::pow(n.mass_sq, params.sigma + 1.0);
}

Field bump_family(double c, int n, const GridPtr& grid) {
  if (!(c > 0.0) || n < 1)
    throw std::invalid_argument("bump_family: need c > 0 and n >= 1");
  const Grid& g = *grid;
  const double spacing = kPi / g.half_length();
  if (spacing > 0.25 / n)
    throw std::domain_error(
        "bump_family: unresolvable (frequency lattice coarser than the "
        "width-1/n bump)");
  if (g.nyquist() < 1.0 + 1.0 / n + 0.5)
    throw std::domain_error("bump_family: unresolvable (shell beyond Nyquist)");

  std::vector<cplx> vals(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    double r2 = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      const double xid = g.xi(idx[d]) - (d == 0 ? 1.0 : 0.0);
      r2 += xid * xid;
    }
    const double rn = n * std::sqrt(r2);
    vals[flat] =
        rn >= 1.0 ? cplx{} : cplx(std::pow(n, 0.5 * g.dim()) *
                                      (1.0 - smoothstep(rn)), 0.0);
  }
  Field f(grid, Rep::frequency, std::move(vals));
  const double m0 = norms(f).mass;
  if (m0 <= 0.0) throw std::runtime_error("bump_family: empty bump support");
  return scaled(f, std::sqrt(c / m0));
}

std::optional<GaussianWitness> find_gaussian_witness(
    const PhysicsParams& params, double c, const GridPtr& grid) {
  for (double tau = 1.0; tau > 1e-6; tau *= 0.5) {
    Field u(grid, Rep::physical);
    try {
      u = gaussian_family(params, c, tau, grid);
    } catch (const std::domain_error&) {
      break;  // grid stops resolving this tau; smaller ones only get worse
    }
    const double phi = energy(params, u).Phi;
    if (phi < 0.0) return GaussianWitness{tau, phi};
  }
  return std::nullopt;
}

std::optional<BesselWitness> find_bessel_witness(const PhysicsParams& params,
                                                 double c, int max_m) {
  for (int m = 1; m <= max_m; m *= 2) {
    const double phi = bessel_phi_radial(params, c, m);
    if (phi < 0.0) return BesselWitness{m, phi};
  }
  return std::nullopt;
}

}  // namespace bnls
