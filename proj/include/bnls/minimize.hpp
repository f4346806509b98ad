#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnls/field.hpp"
#include "bnls/functionals.hpp"
#include "bnls/params.hpp"

namespace bnls {

enum class Preconditioner { none, biharmonic };
enum class InitStrategy { gaussian_tau_opt, bessel_m_opt, random, provided };
enum class Classification { minimizer_found, vanishing_suspected, not_converged };

const char* to_string(Classification c);
const char* to_string(InitStrategy s);

struct SolveOptions {
  int max_iterations = 20000;
  double step_size = 1.0;        // initial preconditioned step
  double tol_gradient = 1e-8;    // on the preconditioned projected gradient
  double tol_margin = 0.0;       // 0 => 1e-4 * (beta^2 / 8 gamma) * c
  Preconditioner preconditioner = Preconditioner::biharmonic;
  InitStrategy init = InitStrategy::gaussian_tau_opt;
  unsigned long long seed = 1234;
  bool dealias = false;  // 2/3 truncation of the nonlinear term
  double localization_radius_fraction = 0.125;  // ball radius / half_length
  bool record_energy_trace = false;
  double critical_mass_bound = 0.0;  // declared c*_N when sigma N = 4
};

/// Converged-minimizer summary. margin = m_hat + beta^2 c / (8 gamma) is the
/// existence criterion: strictly negative margin certifies a minimizer.
struct MinimizeReport {
  double c = 0.0;
  double m_hat = 0.0;
  double lambda_hat = 0.0;
  double pohozaev_residual = 0.0;
  double shell_concentration = 0.0;
  double ratio_lap = 0.0;   // ||lap u||_2 / ||u||_2
  double ratio_grad = 0.0;  // ||grad u||_2 / ||u||_2
  double margin = 0.0;
  int iterations = 0;
  bool converged = false;
  Classification classification = Classification::not_converged;
  double localization = 0.0;  // largest ball-mass fraction
  double grad_norm = 0.0;
  std::vector<double> energy_trace;  // filled when requested
};

struct MinimizeResult {
  MinimizeReport report;
  Field state;
};

/// Preconditioned projected gradient descent with renormalization:
///   w = u_k - h P(grad E(u_k)),  u_{k+1} = sqrt(c) w / ||w||_2,
/// backtracking on h so the energy never increases across accepted steps.
/// Throws std::invalid_argument (message "invalid_regime...") for
/// supercritical parameters or critical mass at/above the declared bound.
MinimizeResult minimize_on_sphere(const PhysicsParams& params,
                                  const GridPtr& grid, double c,
                                  const SolveOptions& opts,
                                  const Field* initial = nullptr);

double effective_tol_margin(const PhysicsParams& params, double c,
                            const SolveOptions& opts);

/// Largest mass fraction contained in a grid ball of the given radius.
double localization_fraction(const Field& u, double radius);

struct ScanRecord {
  double sigma = 0.0;
  double c = 0.0;
  double margin = 0.0;
  double m_hat = 0.0;
  Classification classification = Classification::not_converged;
  int iterations = 0;
  bool ok = true;
  std::string error;
};

struct ScanSummary {
  std::vector<ScanRecord> records;
  /// Smallest scanned c whose solve certified margin < -tol_margin;
  /// unset when no record qualifies.
  std::optional<double> c0_estimate;
};

/// Multi-start minimize (family witnesses plus one random start); best final
/// energy wins, ties by iteration count.
ScanRecord classify_existence(const PhysicsParams& params, const GridPtr& grid,
                              double c, const SolveOptions& opts);

/// Independent solves over the (sigma, c) product, optionally in parallel.
/// Records are sorted by (sigma, c) and deterministic given the seed.
ScanSummary scan(const PhysicsParams& params_template, const GridPtr& grid,
                 const std::vector<double>& sigma_list,
                 const std::vector<double>& c_list, const SolveOptions& opts,
                 int threads = 1);

}  // namespace bnls
