#pragma once

#include <optional>
#include <vector>

#include "bnls/field.hpp"
#include "bnls/params.hpp"

namespace bnls {

enum class Family { gaussian_tau, bessel_m, bump_n };

/// Log-log power-law fit of an observable over a family parameter.
struct FamilyBoundReport {
  Family family = Family::gaussian_tau;
  std::vector<double> parameter_values;  // strictly increasing
  std::vector<double> observed;          // positive, same length
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;  // log of the prefactor
};

FamilyBoundReport fit_bound(Family family,
                            const std::vector<double>& parameter_values,
                            const std::vector<double>& observed);

// --- radial profile (lap + 1) psi = 0 ---------------------------------------

/// psi(r) = r^{-(N-2)/2} J_{(N-2)/2}(r) for N >= 2, with the removable
/// singularity filled at r = 0; for N = 1 the even solution sqrt(2/pi) cos r.
double psi_profile(int dim, double r);
/// Radial derivative, -r^{-(N-2)/2} J_{N/2}(r).
double psi_radial_derivative(int dim, double r);

/// Radial cutoff: 1 on r <= 1, 0 on r >= 2, monotone C^4 smoothstep between.
double cutoff(double r);
double cutoff_derivative(double r);
double cutoff_second_derivative(double r);

// --- Gaussian family (normalized parameters gamma = 2, beta = 4) ------------

/// u_tau(x) = pi^{-N/4} c^{1/2} tau^{(N+1)/2} e^{i x_1}
///            exp(-(tau^4 x_1^2 + tau^2 (x_2^2 + ... + x_N^2)) / 2).
/// Mass is c. Throws when box or Nyquist cannot resolve the two scales.
Field gaussian_family(const PhysicsParams& params, double c, double tau,
                      const GridPtr& grid);

/// Closed forms of the Gaussian-family integrals: the (2s+2) integral
///   pi^{-sN/2} (s+1)^{-N/2} c^{s+1} tau^{(N+1)s}
/// and the quadratic form ||lap u||^2 - 2 ||grad u||^2 + ||u||^2.
double gaussian_nonlinear_closed(int dim, double sigma, double c, double tau);
double gaussian_quadratic_closed(int dim, double c, double tau);
/// Phi(u_tau) assembled from the closed forms above.
double gaussian_phi_closed(const PhysicsParams& params, double c, double tau);

// --- Bessel cutoff family ----------------------------------------------------

/// psi_m = psi * cutoff(./m), normalized to mass c on the grid. N >= 2 and
/// half_length >= 2m + margin are required; throws "box_too_small" otherwise.
Field bessel_family(const PhysicsParams& params, double c, int m,
                    const GridPtr& grid);

/// Radial-quadrature norms of the unnormalized psi_m (exact in any dimension,
/// no grid): ||psi_m||_2^2, ||(lap+1) psi_m||_2^2 and ||psi_m||_{2s+2}^{2s+2}.
struct BesselFamilyNorms {
  double mass_sq = 0.0;
  double lap_plus_one_sq = 0.0;
  double lp_pow = 0.0;
};
BesselFamilyNorms bessel_radial_norms(int dim, double sigma, int m);

/// Phi of the mass-c normalized member, from the radial norms.
double bessel_phi_radial(const PhysicsParams& params, double c, int m);

// --- Fourier bump family -----------------------------------------------------

/// u_n with u_hat(xi) = n^{N/2} bump(n (xi - e_1)), normalized to mass c.
/// Concentrates the spectrum on the unit shell as n grows. Throws when the
/// frequency lattice cannot resolve the width-1/n bump.
Field bump_family(double c, int n, const GridPtr& grid);

// --- witness searches --------------------------------------------------------

struct GaussianWitness {
  double tau = 0.0;
  double phi = 0.0;
};
/// Logarithmic sweep tau = 2^{-k}; first tau with Phi(u_tau) < 0 on the grid.
std::optional<GaussianWitness> find_gaussian_witness(
    const PhysicsParams& params, double c, const GridPtr& grid);

struct BesselWitness {
  int m = 0;
  double phi = 0.0;
};
/// Logarithmic sweep m = 2^k using the radial norms; first m with Phi < 0.
std::optional<BesselWitness> find_bessel_witness(const PhysicsParams& params,
                                                 double c, int max_m = 4096);

}  // namespace bnls
