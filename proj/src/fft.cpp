#include "bnls/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace bnls::detail {
namespace {

std::mutex g_plan_mutex;

// fftw_execute_dft is safe to call concurrently on a shared plan as long as
// the arrays differ; only plan creation needs the lock. FFTW_UNALIGNED lets
// us execute on ordinary std::vector storage.
fftw_plan get_plan(int dim, int m, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_tuple(dim, m, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::size_t total = 1;
  std::vector<int> n(static_cast<std::size_t>(dim), m);
  for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(m);
  std::vector<cplx> scratch_in(total), scratch_out(total);
  fftw_plan p = fftw_plan_dft(
      dim, n.data(), reinterpret_cast<fftw_complex*>(scratch_in.data()),
      reinterpret_cast<fftw_complex*>(scratch_out.data()),
      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void dft(int dim, int m, const cplx* in, cplx* out, int sign) {
  fftw_plan p = get_plan(dim, m, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void dft_1d(std::size_t n, const cplx* in, cplx* out, int sign) {
  dft(1, static_cast<int>(n), in, out, sign);
}

void fractional_dft(std::size_t n, const cplx* in, cplx* out, double alpha) {
  // Bluestein: e^{i a jt} = e^{i a (j^2+t^2)/2} e^{-i a (j-t)^2/2}.
  // Chirp arguments grow like a*n^2; evaluate them in long double so the
  // reduced phase keeps ~1e-15 accuracy for the grids used here.
  const std::size_t p = 2 * n;  // n is a power of two, so p >= 2n-1
  const long double a = static_cast<long double>(alpha);

  std::vector<cplx> b(p, cplx(0.0, 0.0)), c(p, cplx(0.0, 0.0));
  for (std::size_t t = 0; t < n; ++t) {
    const long double phase = 0.5L * a * static_cast<long double>(t) *
                              static_cast<long double>(t);
    const cplx chirp(static_cast<double>(std::cos(phase)),
                     static_cast<double>(std::sin(phase)));
    b[t] = in[t] * chirp;
    c[t] = std::conj(chirp);
    if (t > 0) c[p - t] = std::conj(chirp);  // c_{-t} wrapped
  }

  std::vector<cplx> bh(p), ch(p), prod(p);
  dft_1d(p, b.data(), bh.data(), -1);
  dft_1d(p, c.data(), ch.data(), -1);
  for (std::size_t k = 0; k < p; ++k) prod[k] = bh[k] * ch[k];
  dft_1d(p, prod.data(), b.data(), +1);

  const double inv_p = 1.0 / static_cast<double>(p);
  for (std::size_t j = 0; j < n; ++j) {
    const long double phase = 0.5L * a * static_cast<long double>(j) *
                              static_cast<long double>(j);
    const cplx chirp(static_cast<double>(std::cos(phase)),
                     static_cast<double>(std::sin(phase)));
    out[j] = b[j] * inv_p * chirp;
  }
}

}  // namespace bnls::detail
