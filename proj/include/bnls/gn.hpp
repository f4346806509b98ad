#pragma once

#include <vector>

#include "bnls/field.hpp"
#include "bnls/minimize.hpp"
#include "bnls/params.hpp"

namespace bnls {

/// Best-constant estimate for ||u||_{2s+2}^{2s+2} <= B ||lap u||^{sN/2} ||u||^{2+2s-sN/2}
/// and, at the mass-critical exponent sigma = 4/N, the derived threshold
///   c*_N = (gamma C(N) / alpha)^{N/4},  C(N) = (N+4) / (N B_N(4/N)).
struct GNReport {
  double sigma = 0.0;
  int dim = 0;
  double B_N = 0.0;
  double C_N = 0.0;     // only meaningful when sigma N = 4
  double c_star = 0.0;  // only meaningful when sigma N = 4
};

struct GNResult {
  GNReport report;
  Field maximizer;
};

/// W(u) = ||u||_{2s+2}^{2s+2} / (||lap u||_2^{sN/2} ||u||_2^{2+2s-sN/2}),
/// invariant under amplitude scaling and mass-preserving dilation.
double weinstein_quotient(double sigma, const Field& u);

/// Scale-invariant preconditioned ascent of W with multi-start; the returned
/// maximizer is mass-normalized. Rejects sigma outside (0, 4/(N-4)^+).
GNResult estimate_bn(double sigma, int dim, const GridPtr& grid,
                     const SolveOptions& opts);

/// Single ascent from a given start (used for spread diagnostics).
GNResult weinstein_ascent(double sigma, int dim, const Field& start,
                          const SolveOptions& opts);

/// Fills C_N and c_star from a B_N estimate; requires sigma N = 4.
GNReport critical_mass(const PhysicsParams& params, double b_n);

/// Energies E(w_s) along the dilation ray of w = sqrt(c) U / ||U||_2, with U
/// first rescaled so that ||lap U||_2 = ||U||_2. Below the critical mass the
/// ray is coercive; above it the energies decrease without bound.
std::vector<double> unbounded_witness(const PhysicsParams& params, double c,
                                      const std::vector<double>& s_list,
                                      const Field& maximizer);

}  // namespace bnls
