#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bnls/families.hpp"
#include "bnls/functionals.hpp"
#include "testutil.hpp"

using namespace bnls;
using bnls::test::gaussian_bump;
using bnls::test::grid1d;
using bnls::test::grid2d;
using bnls::test::normalized_params;
using bnls::test::rel_err;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("zero field gives an all-zero breakdown") {
  auto g = grid1d(64);
  Field z(g, Rep::physical);
  EnergyBreakdown bd = energy(normalized_params(), z);
  CHECK(bd.lap_term == 0.0);
  CHECK(bd.grad_term == 0.0);
  CHECK(bd.nonlinear_term == 0.0);
  CHECK(bd.E == 0.0);
  CHECK(bd.Phi == 0.0);
}

TEST_CASE("Gaussian family member at tau = 1: closed-form terms") {
  // N=1, sigma=1, c=1: nonlinear term = (1/4)(2 pi)^{-1/2},
  // ||lap u||^2 - 2||grad u||^2 + ||u||^2 = 2.75
  auto g = make_grid(GridSpec{1, 16.0, 256});
  const PhysicsParams p = normalized_params();
  Field u = gaussian_family(p, 1.0, 1.0, g);
  EnergyBreakdown bd = energy(p, u);
  CHECK(rel_err(bd.mass, 1.0) < 1e-8);
  CHECK(rel_err(bd.nonlinear_term, 0.25 / std::sqrt(2.0 * kPi)) < 1e-8);
  const NormTriple n = norms(u);
  CHECK(rel_err(n.lap_sq - 2.0 * n.grad_sq + n.mass, 2.75) < 1e-8);
  // Phi agrees with E + mass under normalized parameters
  CHECK(std::abs(bd.Phi - (bd.E + bd.mass)) < 1e-12);
}

TEST_CASE("quadratic part is bounded below: I >= -beta^2/(4 gamma) mass") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(128);
  for (unsigned long long seed = 0; seed < 1000; ++seed) {
    Field f = random_field(g, seed, 0.7);
    EnergyBreakdown bd = energy(p, f);
    CHECK(bd.I >= p.quadratic_floor() * bd.mass - 1e-10);
  }
}

TEST_CASE("E, I, Phi are translation invariant") {
  const PhysicsParams p = normalized_params(0.75, 2);
  auto g = grid2d(32);
  Field f = random_field(g, 5, 1.0);
  Field s = cyclic_shift(f, {9, 21});
  EnergyBreakdown a = energy(p, f), b = energy(p, s);
  CHECK(rel_err(a.E, b.E) < 1e-10);
  CHECK(rel_err(a.I, b.I) < 1e-10);
  CHECK(rel_err(a.Phi, b.Phi) < 1e-10);
}

TEST_CASE("dilate: identity at s = 1 and mass preservation") {
  auto g = grid1d(256);
  Field f = to_physical(random_field(g, 3, 2.0));
  Field f1 = dilate(f, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i)
    worst = std::max(worst, std::abs(f.values()[i] - f1.values()[i]));
  CHECK(worst < 1e-12);

  for (double s : {0.25, 0.5, 2.0, 4.0}) {
    Field fs = dilate(gaussian_bump(g, 2.0), s);
    CHECK(rel_err(norms(fs).mass, norms(gaussian_bump(g, 2.0)).mass) < 1e-8);
  }
}

TEST_CASE("dilate matches the closed-form energy rescaling") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(512);
  Field u = gaussian_bump(g, 2.0);
  EnergyBreakdown at_one = energy(p, u);
  for (double s : {0.25, 0.5, 2.0}) {
    const double direct = energy(p, dilate(u, s)).E;
    const double closed = energy_along_dilation(p, at_one, s);
    CHECK(rel_err(direct, closed) < 1e-6);
  }
}

TEST_CASE("E(u_s) becomes negative as s -> 0") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(512);
  Field u = gaussian_bump(g, 1.0);
  double prev = energy(p, u).E;
  bool negative = false;
  for (double s : {0.25, 0.0625, 0.015625}) {
    const double e = energy(p, dilate(u, s)).E;
    CHECK(e < std::abs(prev));  // shrinking toward zero from below
    prev = e;
    if (e < 0.0) negative = true;
  }
  CHECK(negative);
}

TEST_CASE("dilation minimum of the quadratic part") {
  // inf_s I(u_s) = -beta^2/(8 gamma) ||grad u||^4 / ||lap u||^2
  const PhysicsParams p = normalized_params();
  auto g = grid1d(512);
  Field u = gaussian_bump(g, 1.5);
  const NormTriple n = norms(u);
  const double s_star = p.beta * n.grad_sq / (2.0 * p.gamma * n.lap_sq);
  const double want =
      -p.beta * p.beta / (8.0 * p.gamma) * n.grad_sq * n.grad_sq / n.lap_sq;
  const double got = energy(p, dilate(u, s_star)).I;
  CHECK(rel_err(got, want) < 1e-8);
  // and it is the minimum along the ray
  for (double s : {0.5 * s_star, 2.0 * s_star})
    CHECK(energy(p, dilate(u, s)).I > want - 1e-12);
}

TEST_CASE("dilate rejects unrepresentable rescalings") {
  // a field that fills the band cannot be compressed much
  auto g = grid1d(64, kPi);
  std::vector<cplx> hat(g->size(), cplx(1.0, 0.0));
  Field full(g, Rep::frequency, std::move(hat));
  CHECK_THROWS_AS(dilate(full, 4.0), std::domain_error);
  // a field touching the box edge cannot be spread much
  Field wide = gaussian_bump(grid1d(256, 10.0), 3.0);
  CHECK_THROWS_AS(dilate(wide, 0.0625), std::domain_error);
}

TEST_CASE("amplitude scaling laws") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(128);
  Field u = random_field(g, 11, 1.0);
  Field t1 = amplitude_scale(u, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < u.values().size(); ++i)
    worst = std::max(worst, std::abs(u.values()[i] - t1.values()[i]));
  CHECK(worst == 0.0);

  Field t3 = amplitude_scale(u, 3.0);
  CHECK(rel_err(norms(t3).mass, 3.0 * norms(u).mass) < 1e-12);
  const double pexp = 2.0 * p.sigma + 2.0;
  CHECK(rel_err(lp_norm_pow(t3, pexp),
                std::pow(3.0, p.sigma + 1.0) * lp_norm_pow(u, pexp)) < 1e-10);

  // strict scaling inequality E(tilde u)/tau < E(u) for tau > 1 when the
  // nonlinear term is positive
  for (double tau : {2.0, 4.0}) {
    const double lhs = energy(p, amplitude_scale(u, tau)).E / tau;
    CHECK(lhs < energy(p, u).E);
  }
}

TEST_CASE("Rayleigh quotient: Gaussian value, homogeneity, upper bound") {
  auto g = grid1d(256, 10.0 * kPi);
  Field u = gaussian_bump(g, 1.0);
  CHECK(rel_err(rayleigh_quotient(u), 1.0 / 3.0) < 1e-8);
  CHECK(rel_err(rayleigh_quotient(scaled(u, -2.5)), 1.0 / 3.0) < 1e-12);
  for (unsigned long long seed = 0; seed < 200; ++seed) {
    const double r = rayleigh_quotient(random_field(g, seed, 1.0));
    CHECK(r <= 1.0 + 1e-10);
    CHECK(r > 0.0);
  }
  Field z(g, Rep::physical);
  CHECK_THROWS(rayleigh_quotient(z));
}

TEST_CASE("Lagrange multiplier: two routes agree on any field") {
  const PhysicsParams p = normalized_params(0.8, 1);
  auto g = grid1d(128);
  for (unsigned long long seed = 0; seed < 50; ++seed) {
    Field u = random_field(g, seed, 1.3);
    EnergyBreakdown bd = energy(p, u);
    const double direct = lagrange_multiplier(p, bd);
    // -lambda c = 2 E(u) - 2 alpha sigma/(2 sigma + 2) ||u||_{2s+2}^{2s+2}
    const double nl = bd.nonlinear_integral(p.alpha, p.sigma);
    const double other =
        -(2.0 * bd.E - 2.0 * p.alpha * p.sigma / (2.0 * p.sigma + 2.0) * nl) /
        bd.mass;
    CHECK(rel_err(direct, other) < 1e-10);
  }
}

TEST_CASE("Lagrange multiplier in the quadratic limit obeys the floor") {
  // alpha -> 0: lambda = -I-quotient <= beta^2/(4 gamma)
  const PhysicsParams p(2.0, 4.0, 1e-14, 1.0, 1);
  auto g = grid1d(128);
  for (unsigned long long seed = 0; seed < 100; ++seed) {
    Field u = random_field(g, seed, 1.0);
    CHECK(lagrange_multiplier(p, u) <= -p.quadratic_floor() + 1e-9);
  }
}

TEST_CASE("Pohozaev residual: positive generically, translation invariant") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(128);
  Field u = random_field(g, 23, 1.0);
  const double r = pohozaev_residual(p, u);
  CHECK(r > 0.0);
  const double rs = pohozaev_residual(p, cyclic_shift(u, {37}));
  CHECK(rel_err(r, rs) < 1e-10);
}

TEST_CASE("shell concentration: on-shell fields score near zero") {
  const PhysicsParams p = normalized_params();
  auto g = grid1d(128);  // L = 16 pi, lattice spacing 1/16
  // support the spectrum on the lattice point nearest |xi| = 1
  std::vector<cplx> hat(g->size(), cplx{});
  int best_k = 0;
  double best = 1e300;
  for (int k = 0; k < g->m(); ++k) {
    const double d = std::abs(g->xi(k) * g->xi(k) - p.shell_xi_sq());
    if (d < best) {
      best = d;
      best_k = k;
    }
  }
  hat[static_cast<std::size_t>(best_k)] = cplx(1.0, 0.0);
  Field shell(g, Rep::frequency, std::move(hat));
  const double spacing = kPi / g->half_length();
  CHECK(shell_concentration(p, shell) <=
        std::pow(2.0 * spacing + spacing * spacing, 2.0));
}

TEST_CASE("shell concentration satisfies the multiplier identity") {
  // gamma K(v) = alpha ||u||_{2s+2}^{2s+2}/c + beta^2/(4 gamma) - lambda
  const PhysicsParams p = normalized_params();
  auto g = grid1d(128);
  for (unsigned long long seed = 0; seed < 50; ++seed) {
    Field u = random_field(g, seed, 0.9);
    EnergyBreakdown bd = energy(p, u);
    const double k = shell_concentration(p, u);
    const double rhs = p.alpha * bd.nonlinear_integral(p.alpha, p.sigma) /
                           bd.mass -
                       p.quadratic_floor() - lagrange_multiplier(p, bd);
    CHECK(std::abs(p.gamma * k - rhs) < 1e-9);
  }
}

TEST_CASE("Fourier symmetrization: preservation, idempotence, L4 growth") {
  auto g = grid1d(128);
  int l4_failures = 0;
  for (unsigned long long seed = 0; seed < 1000; ++seed) {
    Field u = random_field(g, seed, 1.0);
    Field q = fourier_symmetrize(u);
    NormTriple a = norms(u), b = norms(q);
    CHECK(rel_err(a.mass, b.mass) < 1e-10);
    CHECK(rel_err(a.grad_sq, b.grad_sq) < 1e-10);
    CHECK(rel_err(a.lap_sq, b.lap_sq) < 1e-10);
    if (lp_norm_pow(q, 4.0) < lp_norm_pow(u, 4.0) * (1.0 - 1e-12))
      ++l4_failures;
  }
  CHECK(l4_failures == 0);
}

TEST_CASE("Fourier symmetrization: fixed point and pointwise bound") {
  auto g = grid1d(256, 10.0 * kPi);
  Field u = gaussian_bump(g, 1.0);  // its spectrum is already nonnegative
  Field q = fourier_symmetrize(u);
  double worst = 0.0;
  for (std::size_t i = 0; i < u.values().size(); ++i)
    worst = std::max(worst, std::abs(u.values()[i] - q.values()[i]));
  CHECK(worst < 1e-12);

  Field r = fourier_symmetrize(random_field(g, 7, 1.0));
  Field rr = fourier_symmetrize(r);
  double drift = 0.0;
  for (std::size_t i = 0; i < r.values().size(); ++i)
    drift = std::max(drift, std::abs(r.values()[i] - rr.values()[i]));
  CHECK(drift < 1e-10);

  // center value dominates and Q(-x) = conj(Q(x))
  const Grid& grid = r.grid();
  const std::size_t center = static_cast<std::size_t>(grid.m() / 2);
  const double peak = std::abs(r.values()[center]);
  for (int j = 0; j < grid.m(); ++j) {
    CHECK(std::abs(r.values()[static_cast<std::size_t>(j)]) <= peak + 1e-10);
    const int jr = (grid.m() - j) % grid.m();
    CHECK(std::abs(r.values()[static_cast<std::size_t>(j)] -
                   std::conj(r.values()[static_cast<std::size_t>(jr)])) <
          1e-10);
  }
}
