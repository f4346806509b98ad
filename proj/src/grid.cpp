#include "bnls/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace bnls {
namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

Grid::Grid(const GridSpec& spec) : spec_(spec) {
  if (spec.dim < 1 || spec.dim > 4)
    throw std::invalid_argument("grid: dim must be in 1..4");
  if (!(spec.half_length > 0.0))
    throw std::invalid_argument("grid: half_length must be positive");
  if (!is_power_of_two(spec.points_per_axis) || spec.points_per_axis < 16)
    throw std::invalid_argument(
        "grid: points_per_axis must be a power of two >= 16");

  const int m = spec.points_per_axis;
  const double pi = 3.14159265358979323846;
  size_ = 1;
  for (int d = 0; d < spec.dim; ++d) size_ *= static_cast<std::size_t>(m);
  dx_ = 2.0 * spec.half_length / m;
  cell_volume_ = std::pow(dx_, spec.dim);
  freq_cell_volume_ = std::pow(pi / spec.half_length, spec.dim);
  nyquist_ = pi * (m / 2) / spec.half_length;

  xi_axis_.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const int signed_k = k < m / 2 ? k : k - m;
    xi_axis_[static_cast<std::size_t>(k)] = pi * signed_k / spec.half_length;
  }

  xi_sq_.resize(size_);
  center_sign_.resize(size_);
  int idx[4] = {0, 0, 0, 0};
  for (std::size_t flat = 0; flat < size_; ++flat) {
    double s = 0.0;
    int parity = 0;
    for (int d = 0; d < spec.dim; ++d) {
      const double xi = xi_axis_[static_cast<std::size_t>(idx[d])];
      s += xi * xi;
      parity += idx[d];
    }
    xi_sq_[flat] = s;
    center_sign_[flat] = (parity & 1) ? -1.0 : 1.0;
    // odometer increment, last axis fastest (row-major)
    for (int d = spec.dim - 1; d >= 0; --d) {
      if (++idx[d] < m) break;
      idx[d] = 0;
    }
  }
}

void Grid::unflatten(std::size_t flat, int* idx) const {
  const int m = spec_.points_per_axis;
  for (int d = spec_.dim - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(flat % static_cast<std::size_t>(m));
    flat /= static_cast<std::size_t>(m);
  }
}

GridPtr make_grid(const GridSpec& spec) { return std::make_shared<Grid>(spec); }

}  // namespace bnls
