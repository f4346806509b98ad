#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace bnls {

using cplx = std::complex<double>;

/// Parameters of the periodic computational box [-L, L]^N.
struct GridSpec {
  int dim = 1;                    // N, 1..4
  double half_length = 16.0 * 3.14159265358979323846;  // L
  int points_per_axis = 256;      // M, power of two >= 16
};

/// Immutable periodic grid: physical nodes x_j = -L + j*dx and the frequency
/// lattice xi_k = pi*k/L, k = -M/2 .. M/2-1, stored in FFT natural order.
class Grid {
 public:
  explicit Grid(const GridSpec& spec);

  int dim() const { return spec_.dim; }
  int m() const { return spec_.points_per_axis; }
  double half_length() const { return spec_.half_length; }
  const GridSpec& spec() const { return spec_; }

  std::size_t size() const { return size_; }
  double dx() const { return dx_; }
  double cell_volume() const { return cell_volume_; }          // dx^N
  double freq_cell_volume() const { return freq_cell_volume_; }  // (pi/L)^N
  /// Largest resolvable |xi| along one axis, pi*(M/2)/L.
  double nyquist() const { return nyquist_; }

  /// Signed frequency for storage index k in [0, M).
  double xi(int k) const { return xi_axis_[static_cast<std::size_t>(k)]; }
  /// Physical coordinate for index j in [0, M).
  double x(int j) const { return -spec_.half_length + dx_ * j; }

  /// |xi|^2 for every flat index, FFT natural order, row-major axes.
  const std::vector<double>& xi_sq() const { return xi_sq_; }
  /// (-1)^(k_1+...+k_N), the phase relating the DFT to the centered box.
  const std::vector<double>& center_sign() const { return center_sign_; }

  /// Decompose a flat index into per-axis indices.
  void unflatten(std::size_t flat, int* idx) const;

 private:
  GridSpec spec_;
  std::size_t size_;
  double dx_, cell_volume_, freq_cell_volume_, nyquist_;
  std::vector<double> xi_axis_;
  std::vector<double> xi_sq_;
  std::vector<double> center_sign_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(const GridSpec& spec);

}  // namespace bnls
