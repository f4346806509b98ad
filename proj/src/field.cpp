#include "bnls/field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "bnls/fft.hpp"

namespace bnls {

namespace {
const double kTwoPi = 6.28318530717958647692;
}

Field::Field(GridPtr grid, Rep rep, std::vector<cplx> values)
    : grid_(std::move(grid)), rep_(rep), values_(std::move(values)) {
  if (values_.size() != grid_->size())
    throw std::invalid_argument("field: value count does not match grid");
}

Field to_frequency(const Field& f) {
  if (f.rep() == Rep::frequency) return f;
  const Grid& g = f.grid();
  std::vector<cplx> out(g.size());
  detail::dft(g.dim(), g.m(), f.values().data(), out.data(), -1);
  const auto& sign = g.center_sign();
  const double w = g.cell_volume();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= w * sign[i];
  return Field(f.grid_ptr(), Rep::frequency, std::move(out));
}

Field to_physical(const Field& f) {
  if (f.rep() == Rep::physical) return f;
  const Grid& g = f.grid();
  const auto& sign = g.center_sign();
  std::vector<cplx> tmp(g.size());
  for (std::size_t i = 0; i < tmp.size(); ++i)
    tmp[i] = f.values()[i] * sign[i];
  std::vector<cplx> out(g.size());
  detail::dft(g.dim(), g.m(), tmp.data(), out.data(), +1);
  const double w = 1.0 / std::pow(2.0 * g.half_length(), g.dim());
  for (auto& v : out) v *= w;
  return Field(f.grid_ptr(), Rep::physical, std::move(out));
}

Field in_rep(const Field& f, Rep rep) {
  return rep == Rep::frequency ? to_frequency(f) : to_physical(f);
}

NormTriple norms(const Field& f) {
  const Field fh = to_frequency(f);
  const Grid& g = fh.grid();
  const auto& xi2 = g.xi_sq();
  double m = 0.0, gr = 0.0, la = 0.0;
  const auto v = fh.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::norm(v[i]);
    m += a;
    gr += xi2[i] * a;
    la += xi2[i] * xi2[i] * a;
  }
  const double w =
      g.freq_cell_volume() / std::pow(kTwoPi, g.dim());  // Plancherel
  return NormTriple{m * w, gr * w, la * w};
}

double mass_physical(const Field& f) {
  const Field fp = to_physical(f);
  double s = 0.0;
  for (const auto& v : fp.values()) s += std::norm(v);
  return s * fp.grid().cell_volume();
}

double lp_norm_pow(const Field& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const Field fp = to_physical(f);
  double s = 0.0;
  if (p == 2.0) {
    for (const auto& v : fp.values()) s += std::norm(v);
  } else {
    for (const auto& v : fp.values()) s += std::pow(std::abs(v), p);
  }
  return s * fp.grid().cell_volume();
}

double inner_real(const Field& a, const Field& b) {
  if (a.grid_ptr() != b.grid_ptr() || a.rep() != b.rep())
    throw std::invalid_argument("inner_real: mismatched fields");
  double s = 0.0;
  const auto va = a.values(), vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i)
    s += va[i].real() * vb[i].real() + va[i].imag() * vb[i].imag();
  const Grid& g = a.grid();
  const double w = a.rep() == Rep::physical
                       ? g.cell_volume()
                       : g.freq_cell_volume() / std::pow(kTwoPi, g.dim());
  return s * w;
}

Field scaled(const Field& f, double factor) {
  std::vector<cplx> out(f.values().begin(), f.values().end());
  for (auto& v : out) v *= factor;
  return Field(f.grid_ptr(), f.rep(), std::move(out));
}

Field cyclic_shift(const Field& f, const std::vector<int>& offsets) {
  const Field fp = to_physical(f);
  const Grid& g = fp.grid();
  if (static_cast<int>(offsets.size()) != g.dim())
    throw std::invalid_argument("cyclic_shift: offset count != dim");
  const int m = g.m();
  std::vector<cplx> out(g.size());
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    std::size_t src = 0;
    for (int d = 0; d < g.dim(); ++d) {
      int j = (idx[d] - offsets[static_cast<std::size_t>(d)]) % m;
      if (j < 0) j += m;
      src = src * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
    }
    out[flat] = fp.values()[src];
  }
  return Field(fp.grid_ptr(), Rep::physical, std::move(out));
}

Field dealias_23(const Field& f) {
  Field fh = to_frequency(f);
  const Grid& g = fh.grid();
  const int m = g.m();
  const int cutoff = m / 3;  // keep |k| <= M/3 per axis
  auto& v = fh.raw();
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    for (int d = 0; d < g.dim(); ++d) {
      const int signed_k = idx[d] < m / 2 ? idx[d] : idx[d] - m;
      if (std::abs(signed_k) > cutoff) {
        v[flat] = cplx{};
        break;
      }
    }
  }
  return fh;
}

Field random_field(const GridPtr& grid, unsigned long long seed, double mass) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto gauss_pair = [&](double& a, double& b) {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    a = r * std::cos(kTwoPi * u2);
    b = r * std::sin(kTwoPi * u2);
  };

  const Grid& g = *grid;
  const int m = g.m();
  const int band = m / 4;
  std::vector<cplx> hat(g.size(), cplx{});
  int idx[4];
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    g.unflatten(flat, idx);
    bool inside = true;
    double k2 = 0.0;
    for (int d = 0; d < g.dim(); ++d) {
      const int signed_k = idx[d] < m / 2 ? idx[d] : idx[d] - m;
      if (std::abs(signed_k) > band / 2) inside = false;
      k2 += static_cast<double>(signed_k) * signed_k;
    }
    if (!inside) continue;
    double a, b;
    gauss_pair(a, b);
    const double damp = std::exp(-4.0 * k2 / (band * band));
    hat[flat] = cplx(a, b) * damp;
  }
  Field fh(grid, Rep::frequency, std::move(hat));
  const double m0 = norms(fh).mass;
  if (m0 <= 0.0) throw std::runtime_error("random_field: degenerate draw");
  return scaled(fh, std::sqrt(mass / m0));
}

}  // namespace bnls
