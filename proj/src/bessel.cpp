#include "bnls/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace bnls {
namespace {

const long double kPiL = 3.14159265358979323846264338327950288L;

// Ascending series sum_m (-1)^m / (m! Gamma(m+nu+1)) (t/2)^{2m+nu}.
// Long double keeps the alternating cancellation below ~1e-12 absolute up to
// the switchover.
double series_j(double nu, double t) {
  const long double x = static_cast<long double>(t);
  const long double half = 0.5L * x;
  const long double nuL = static_cast<long double>(nu);
  long double term = std::pow(half, nuL) / std::tgamma(nuL + 1.0L);
  long double sum = term;
  const long double q = half * half;
  for (int m = 1; m < 400; ++m) {
    term *= -q / (static_cast<long double>(m) * (nuL + m));
    sum += term;
    if (std::abs(term) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion J_nu(t) ~ sqrt(2/(pi t)) [P cos w - Q sin w],
// w = t - nu pi/2 - pi/4. Truncated at the smallest term.
double hankel_j(double nu, double t) {
  const long double x = static_cast<long double>(t);
  const long double mu = 4.0L * static_cast<long double>(nu) *
                         static_cast<long double>(nu);
  long double p = 1.0L, q = 0.0L;
  long double term = 1.0L;
  long double prev = 1e30L;
  for (int k = 1; k < 64; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) / (8.0L * k * x);
    if (std::abs(term) > prev) break;  // asymptotic tail started growing
    prev = std::abs(term);
    switch (k & 3) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (std::abs(term) < 1e-19L) break;
  }
  const long double w =
      x - static_cast<long double>(nu) * kPiL * 0.5L - kPiL * 0.25L;
  const long double amp = std::sqrt(2.0L / (kPiL * x));
  return static_cast<double>(amp * (p * std::cos(w) - q * std::sin(w)));
}

}  // namespace

double bessel_j(double nu, double t) {
  if (nu < 0.0 || t < 0.0)
    throw std::invalid_argument("bessel_j: nu and t must be >= 0");
  if (t == 0.0) return nu == 0.0 ? 1.0 : 0.0;

  const double switchover = std::max(20.0, 2.0 * nu);
  if (t < switchover) return series_j(nu, t);

  // Asymptotic zone. Evaluate at the fractional base order (where the Hankel
  // expansion is sharpest) and recur upward; with t >= 2 nu the upward
  // three-term recurrence stays in the oscillatory regime and is stable.
  const int steps = static_cast<int>(nu);
  const double base = nu - steps;
  double jm = hankel_j(base, t);
  if (steps == 0) return jm;
  double j0 = hankel_j(base + 1.0, t);
  for (int k = 1; k < steps; ++k) {
    const double order = base + k;
    const double jp = (2.0 * order / t) * j0 - jm;
    jm = j0;
    j0 = jp;
  }
  return j0;
}

double bessel_j_derivative(double nu, double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("bessel_j_derivative: t must be > 0");
  return -bessel_j(nu + 1.0, t) + (nu / t) * bessel_j(nu, t);
}

}  // namespace bnls
