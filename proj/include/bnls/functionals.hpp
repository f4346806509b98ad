#pragma once

#include "bnls/field.hpp"
#include "bnls/params.hpp"

namespace bnls {

/// The individual terms of E(u) plus the derived values E, I and Phi.
/// All stored terms carry their coefficients and are >= 0, so that
///   E = lap_term - grad_term - nonlinear_term,
///   I = lap_term - grad_term,
///   Phi = E + beta^2/(8 gamma) * mass.
struct EnergyBreakdown {
  double lap_term = 0.0;        // gamma/2 ||lap u||_2^2
  double grad_term = 0.0;       // beta/2 ||grad u||_2^2
  double nonlinear_term = 0.0;  // alpha/(2s+2) ||u||_{2s+2}^{2s+2}
  double mass = 0.0;            // ||u||_2^2
  double E = 0.0;
  double I = 0.0;
  double Phi = 0.0;

  double lap_sq(double gamma) const { return 2.0 * lap_term / gamma; }
  double grad_sq(double beta) const { return 2.0 * grad_term / beta; }
  double nonlinear_integral(double alpha, double sigma) const {
    return (2.0 * sigma + 2.0) * nonlinear_term / alpha;
  }
};

EnergyBreakdown energy(const PhysicsParams& params, const Field& u);

/// Energy of the mass-preserving dilation u_s(x) = s^{N/4} u(sqrt(s) x),
/// evaluated from the s = 1 terms:
///   E(u_s) = s^2 lap_term - s grad_term - s^{sigma N / 2} nonlinear_term.
double energy_along_dilation(const PhysicsParams& params,
                             const EnergyBreakdown& at_one, double s);

/// u_s(x) = s^{N/4} u(sqrt(s) x) by band-limited resampling. Preserves mass.
/// Throws std::domain_error when the rescaled field is not representable on
/// the box (spectral tail beyond Nyquist for s > 1, physical tail beyond the
/// shrunken support window for s < 1; threshold 1e-8 of the mass).
Field dilate(const Field& u, double s);

/// Pointwise multiplication by sqrt(tau): mass scales by tau, the (2s+2)
/// integral by tau^{sigma+1}.
Field amplitude_scale(const Field& u, double tau);

/// R(u) = ||grad u||_2^4 / (||lap u||_2^2 ||u||_2^2) in [0, 1].
double rayleigh_quotient(const Field& u);

/// Multiplier estimate from testing the Euler-Lagrange equation against u:
///   lambda = -(gamma ||lap u||^2 - beta ||grad u||^2 - alpha ||u||_{2s+2}^{2s+2}) / ||u||^2.
double lagrange_multiplier(const PhysicsParams& params, const Field& u);
double lagrange_multiplier(const PhysicsParams& params,
                           const EnergyBreakdown& bd);

/// Relative residual of the dilation stationarity identity
///   gamma ||lap u||^2 - beta/2 ||grad u||^2
///     - sigma N / (2 (2 sigma + 2)) alpha ||u||_{2s+2}^{2s+2} = 0,
/// normalized by gamma ||lap u||^2.
double pohozaev_residual(const PhysicsParams& params, const Field& u);
double pohozaev_residual(const PhysicsParams& params,
                         const EnergyBreakdown& bd);

/// (2 pi)^{-N} int (|xi|^2 - beta/(2 gamma))^2 |v_hat|^2 dxi with v = u/||u||_2.
/// At a stationary point with multiplier lambda,
///   gamma * K(v) = alpha ||u||_{2s+2}^{2s+2} / ||u||_2^2 + beta^2/(4 gamma) - lambda.
double shell_concentration(const PhysicsParams& params, const Field& u);

/// Q_bullet = F^{-1} |F u|. Preserves all three quadratic norms exactly and
/// is idempotent; for integer sigma it does not decrease ||.||_{2s+2}.
Field fourier_symmetrize(const Field& u);

}  // namespace bnls
