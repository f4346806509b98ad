#pragma once

namespace bnls {

/// Bessel function of the first kind J_nu(t) for nu >= 0, t >= 0.
/// Power series in long double below the switchover t0 = max(20, 2 nu),
/// Hankel asymptotic expansion (with stable upward order recurrence from the
/// fractional base order) above it. Absolute error below 1e-10 on t in
/// [0, 1e3] for the moderate orders used here (nu <= ~10).
double bessel_j(double nu, double t);

/// d/dt J_nu(t) = -J_{nu+1}(t) + (nu/t) J_nu(t), t > 0.
double bessel_j_derivative(double nu, double t);

}  // namespace bnls
