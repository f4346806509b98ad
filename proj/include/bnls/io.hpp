#pragma once

#include <string>

#include "bnls/field.hpp"

namespace bnls {

/// Binary grid dump. Little-endian layout:
///   int32 dim, int32 points_per_axis, float64 half_length, int32 rep
///   (0 physical, 1 frequency), then M^dim interleaved re/im float64 pairs
///   in row-major order.
void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

/// Static profile plot: |u| along x for 1D fields, |u| over the central
/// slice as a shaded cell raster for 2D fields.
void write_profile_svg(const std::string& path, const Field& f);

}  // namespace bnls
