#pragma once

#include <complex>
#include <cstddef>

namespace bnls::detail {

using cplx = std::complex<double>;

/// Unnormalized complex DFT on an m^dim cube, out-of-place (in != out).
/// sign = -1 for e^{-i...} (forward), +1 for the inverse kernel.
/// Plans are cached per (dim, m, sign); execution is thread-safe.
void dft(int dim, int m, const cplx* in, cplx* out, int sign);

/// One-dimensional transform of arbitrary power-of-two length.
void dft_1d(std::size_t n, const cplx* in, cplx* out, int sign);

/// X_j = sum_t a_t e^{i alpha j t}, j,t = 0..n-1, via Bluestein's algorithm.
/// Exact-phase chirp evaluation in long double; used for band-limited
/// resampling at non-lattice scale factors.
void fractional_dft(std::size_t n, const cplx* in, cplx* out, double alpha);

}  // namespace bnls::detail
