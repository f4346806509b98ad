#pragma once

#include <cmath>
#include <stdexcept>

namespace bnls {

enum class Regime { subcritical, critical };

/// Model constants of the mixed-dispersion energy
///   E(u) = gamma/2 ||lap u||^2 - beta/2 ||grad u||^2
///          - alpha/(2 sigma + 2) ||u||_{2s+2}^{2s+2}
/// with the standing assumptions gamma, beta, alpha > 0 and sigma*N <= 4.
struct PhysicsParams {
  double gamma = 2.0;
  double beta = 4.0;
  double alpha = 1.0;
  double sigma = 1.0;
  int dim = 1;
  Regime regime = Regime::subcritical;

  PhysicsParams() = default;
  PhysicsParams(double gamma_, double beta_, double alpha_, double sigma_,
                int dim_)
      : gamma(gamma_), beta(beta_), alpha(alpha_), sigma(sigma_), dim(dim_) {
    validate();
  }

  void validate() {
    if (!(gamma > 0.0) || !(beta > 0.0) || !(alpha > 0.0))
      throw std::invalid_argument("params: gamma, beta, alpha must be > 0");
    if (dim < 1 || dim > 4)
      throw std::invalid_argument("params: dim must be in 1..4");
    if (!(sigma > 0.0))
      throw std::invalid_argument("params: sigma must be > 0");
    const double sn = sigma * dim;
    if (sn < 4.0 - 1e-12) {
      regime = Regime::subcritical;
    } else if (std::abs(sn - 4.0) <= 1e-12) {
      regime = Regime::critical;
    } else {
      throw std::invalid_argument(
          "params: sigma*N > 4 is supercritical; the subcritical bound "
          "0 < sigma*N < 4 (or = 4 with a critical-mass cap) is required");
    }
  }

  /// -beta^2/(4 gamma), the bottom of the quadratic symbol.
  double quadratic_floor() const { return -beta * beta / (4.0 * gamma); }
  /// beta^2/(8 gamma), the slope of the associated problem per unit mass.
  double margin_scale() const { return beta * beta / (8.0 * gamma); }
  /// |xi|^2 of the minimizing frequency shell, beta/(2 gamma).
  double shell_xi_sq() const { return beta / (2.0 * gamma); }

  bool normalized() const {
    return std::abs(gamma - 2.0) < 1e-12 && std::abs(beta - 4.0) < 1e-12;
  }
};

}  // namespace bnls
