#pragma once

#include <span>
#include <vector>

#include "bnls/grid.hpp"

namespace bnls {

enum class Rep { physical, frequency };

/// A complex-valued sample on a periodic grid, in physical or frequency
/// representation. Treated as immutable after construction: operations
/// allocate fresh fields, so instances can be shared across threads.
///
/// Conventions follow u_hat(xi) = \int e^{-i xi x} u(x) dx, discretized by the
/// box quadrature rule, so that mass(u) = (2 pi)^{-N} * freq-side mass.
class Field {
 public:
  Field(GridPtr grid, Rep rep)
      : grid_(std::move(grid)), rep_(rep), values_(grid_->size(), cplx{}) {}
  Field(GridPtr grid, Rep rep, std::vector<cplx> values);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Rep rep() const { return rep_; }
  std::span<const cplx> values() const { return values_; }
  std::vector<cplx>& raw() { return values_; }  // builders only

 private:
  GridPtr grid_;
  Rep rep_;
  std::vector<cplx> values_;
};

Field to_frequency(const Field& f);
Field to_physical(const Field& f);
/// Returns f converted to the requested representation (no-op copy if equal).
Field in_rep(const Field& f, Rep rep);

struct NormTriple {
  double mass = 0.0;     // ||u||_2^2
  double grad_sq = 0.0;  // ||grad u||_2^2
  double lap_sq = 0.0;   // ||lap u||_2^2
};

/// Quadratic norms via the frequency multipliers |xi|^2 and |xi|^4.
NormTriple norms(const Field& f);

/// Mass by physical-space quadrature (used to cross-check Plancherel).
double mass_physical(const Field& f);

/// \int |f|^p by the uniform grid quadrature rule. Requires p >= 1.
double lp_norm_pow(const Field& f, double p);

/// Real L^2 inner product Re<a, b>; both fields must share grid and rep.
double inner_real(const Field& a, const Field& b);

/// Pointwise scaling by a real factor.
Field scaled(const Field& f, double factor);

/// Cyclic translation by whole lattice steps (physical representation).
Field cyclic_shift(const Field& f, const std::vector<int>& offsets);

/// Zeroes every frequency with any axis index beyond 2/3 of Nyquist.
Field dealias_23(const Field& f);

/// Band-limited random field: Gaussian coefficients within |k| <= M/4 per
/// axis, damped smoothly, normalized to the requested mass. Deterministic in
/// the seed (explicit Box-Muller on the mt19937_64 stream).
Field random_field(const GridPtr& grid, unsigned long long seed,
                   double mass = 1.0);

}  // namespace bnls
