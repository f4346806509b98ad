#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bnls/field.hpp"
#include "testutil.hpp"

using namespace bnls;
using bnls::test::gaussian_bump;
using bnls::test::grid1d;
using bnls::test::grid2d;
using bnls::test::rel_err;

namespace {
const double kPi = 3.14159265358979323846;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS(make_grid(GridSpec{0, 10.0, 64}));
  CHECK_THROWS(make_grid(GridSpec{5, 10.0, 64}));
  CHECK_THROWS(make_grid(GridSpec{1, -1.0, 64}));
  CHECK_THROWS(make_grid(GridSpec{1, 10.0, 48}));   // not a power of two
  CHECK_THROWS(make_grid(GridSpec{1, 10.0, 8}));    // below 16
  CHECK_NOTHROW(make_grid(GridSpec{4, 10.0, 16}));
}

TEST_CASE("constant field transforms to a delta at xi = 0") {
  auto g = grid1d(64);
  std::vector<cplx> ones(g->size(), cplx(1.0, 0.0));
  Field f(g, Rep::physical, std::move(ones));
  Field fh = to_frequency(f);
  // zero frequency entry is the full integral, 2L
  CHECK(rel_err(fh.values()[0].real(), 2.0 * g->half_length()) < 1e-13);
  for (std::size_t k = 1; k < fh.values().size(); ++k)
    CHECK(std::abs(fh.values()[k]) < 1e-10);
}

TEST_CASE("round trip and Plancherel on random fields, N = 1, 2, 3") {
  for (int dim = 1; dim <= 3; ++dim) {
    GridSpec spec{dim, 8.0, dim == 3 ? 16 : 64};
    auto g = make_grid(spec);
    for (unsigned long long seed = 0; seed < 5; ++seed) {
      Field f = to_physical(random_field(g, 17 * seed + 1, 1.5));
      Field back = to_physical(to_frequency(f));
      double worst = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < f.values().size(); ++i) {
        worst = std::max(worst, std::abs(f.values()[i] - back.values()[i]));
        scale = std::max(scale, std::abs(f.values()[i]));
      }
      CHECK(worst / scale < 1e-12);

      // mass agrees between the physical quadrature and (2 pi)^-N freq mass
      CHECK(rel_err(mass_physical(f), norms(f).mass) < 1e-12);
      CHECK(rel_err(norms(f).mass, 1.5) < 1e-12);
    }
  }
}

TEST_CASE("1D Gaussian moments: mass, grad, lap") {
  // exp(-x^2/2): ||u||^2 = sqrt(pi), ||u'||^2 = sqrt(pi)/2,
  // ||u''||^2 = 3 sqrt(pi)/4 (integrals of x^{2k} e^{-x^2})
  auto g = grid1d(256, 10.0 * kPi);
  Field f = gaussian_bump(g, 1.0);
  NormTriple n = norms(f);
  CHECK(rel_err(n.mass, kSqrtPi) < 1e-8);
  CHECK(rel_err(n.grad_sq, 0.5 * kSqrtPi) < 1e-8);
  CHECK(rel_err(n.lap_sq, 0.75 * kSqrtPi) < 1e-8);
}

TEST_CASE("zero field has zero norms and lp") {
  auto g = grid1d(64);
  Field z(g, Rep::physical);
  NormTriple n = norms(z);
  CHECK(n.mass == 0.0);
  CHECK(n.grad_sq == 0.0);
  CHECK(n.lap_sq == 0.0);
  CHECK(lp_norm_pow(z, 4.0) == 0.0);
}

TEST_CASE("lp norm consistency and the Gaussian quartic integral") {
  auto g = grid1d(256, 10.0 * kPi);
  Field f = gaussian_bump(g, 1.0);
  CHECK(rel_err(lp_norm_pow(f, 2.0), norms(f).mass) < 1e-12);
  // int exp(-2 x^2) = sqrt(pi/2)
  CHECK(rel_err(lp_norm_pow(f, 4.0), std::sqrt(kPi / 2.0)) < 1e-8);
  CHECK_THROWS(lp_norm_pow(f, 0.5));
}

TEST_CASE("interpolation inequality on random band-limited fields") {
  auto g1 = grid1d(128);
  auto g2 = grid2d(32);
  int violations = 0;
  for (unsigned long long seed = 0; seed < 1000; ++seed) {
    const Field f = random_field(seed % 2 ? g1 : g2, seed, 1.0);
    const NormTriple n = norms(f);
    const double bound = std::sqrt(n.lap_sq * n.mass);
    if (n.grad_sq > bound * (1.0 + 1e-10)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("norms and lp are invariant under cyclic shifts") {
  auto g = grid2d(32);
  Field f = to_physical(random_field(g, 42, 1.0));
  Field s = cyclic_shift(f, {7, -13});
  NormTriple a = norms(f), b = norms(s);
  CHECK(rel_err(a.mass, b.mass) < 1e-10);
  CHECK(rel_err(a.grad_sq, b.grad_sq) < 1e-10);
  CHECK(rel_err(a.lap_sq, b.lap_sq) < 1e-10);
  CHECK(rel_err(lp_norm_pow(f, 4.0), lp_norm_pow(s, 4.0)) < 1e-10);
}

TEST_CASE("dealias mask removes the outer third of the band") {
  auto g = grid1d(64, kPi);  // xi_k = k
  std::vector<cplx> hat(g->size(), cplx(1.0, 0.0));
  Field f(g, Rep::frequency, std::move(hat));
  Field d = dealias_23(f);
  for (int k = 0; k < g->m(); ++k) {
    const int signed_k = k < g->m() / 2 ? k : k - g->m();
    const bool kept = std::abs(d.values()[static_cast<std::size_t>(k)]) > 0.5;
    CHECK(kept == (std::abs(signed_k) <= g->m() / 3));
  }
}
