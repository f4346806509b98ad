#include "bnls/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace bnls {
namespace {

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

}  // namespace

void write_field(const std::string& path, const Field& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path);
  const Grid& g = f.grid();
  put<std::int32_t>(out, g.dim());
  put<std::int32_t>(out, g.m());
  put<double>(out, g.half_length());
  put<std::int32_t>(out, f.rep() == Rep::frequency ? 1 : 0);
  for (const auto& v : f.values()) {
    put<double>(out, v.real());
    put<double>(out, v.imag());
  }
  if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

Field read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  GridSpec spec;
  spec.dim = get<std::int32_t>(in);
  spec.points_per_axis = get<std::int32_t>(in);
  spec.half_length = get<double>(in);
  const std::int32_t rep = get<std::int32_t>(in);
  GridPtr grid = make_grid(spec);
  std::vector<cplx> vals(grid->size());
  for (auto& v : vals) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    v = cplx(re, im);
  }
  if (!in) throw std::runtime_error("read_field: truncated file " + path);
  return Field(grid, rep ? Rep::frequency : Rep::physical, std::move(vals));
}

void write_profile_svg(const std::string& path, const Field& f) {
  const Field fp = to_physical(f);
  const Grid& g = fp.grid();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("svg: cannot open " + path);

  const int W = 800, H = 400;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (g.dim() == 1) {
    double peak = 0.0;
    for (const auto& v : fp.values()) peak = std::max(peak, std::abs(v));
    if (peak <= 0.0) peak = 1.0;
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" "
           "points=\"";
    const int m = g.m();
    for (int j = 0; j < m; ++j) {
      const double x = static_cast<double>(j) / (m - 1) * (W - 20) + 10;
      const double y =
          H - 20 - std::abs(fp.values()[static_cast<std::size_t>(j)]) / peak *
                       (H - 40);
      out << x << "," << y << " ";
    }
    out << "\"/>\n";
  } else {
    // central 2D slice, downsampled to at most 128 cells per side
    const int m = g.m();
    const int stride = std::max(1, m / 128);
    const int cells = m / stride;
    const double cw = static_cast<double>(W) / cells,
                 ch = static_cast<double>(H) / cells;
    std::size_t tail_size = 1, tail_center = 0;  // remaining axes at center
    for (int d = 2; d < g.dim(); ++d) {
      tail_size *= static_cast<std::size_t>(m);
      tail_center = tail_center * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(m / 2);
    }
    double peak = 0.0;
    std::vector<double> vals(static_cast<std::size_t>(cells) * cells);
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j) {
        const std::size_t flat =
            (static_cast<std::size_t>(i) * stride * m +
             static_cast<std::size_t>(j) * stride) *
                tail_size +
            tail_center;
        const double a = std::abs(fp.values()[flat]);
        vals[static_cast<std::size_t>(i) * cells + j] = a;
        peak = std::max(peak, a);
      }
    if (peak <= 0.0) peak = 1.0;
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j) {
        const int shade = 255 - static_cast<int>(
            255.0 * vals[static_cast<std::size_t>(i) * cells + j] / peak);
        out << "<rect x=\"" << j * cw << "\" y=\"" << i * ch << "\" width=\""
            << cw + 0.5 << "\" height=\"" << ch + 0.5 << "\" fill=\"rgb("
            << shade << "," << shade << ",255)\"/>\n";
      }
  }
  out << "</svg>\n";
}

}  // namespace bnls
