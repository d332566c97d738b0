#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tile360/common.hpp"

namespace tile360 {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Orientation on the view sphere in spherical coordinates: azimuth phi in
// [0, 360), polar theta in [0, 180] with 0 at the north pole and 90 at the
// equator. yaw_pitch_to_sphere is the one place the VR yaw/pitch convention
// is converted to this one.
struct SphereDirection {
  double azimuth_deg = 0.0;
  double polar_deg = 90.0;
};

struct ViewportSpec {
  double hfov_deg = 110.0;
  double vfov_deg = 90.0;
  int sample_grid = 64;  // footprint rasterization, sample_grid^2 rays
};

// N x M equirectangular partition. Tiles are raster indexed top-to-bottom,
// left-to-right: tile k covers azimuth column k % cols and polar row
// k / cols, with row 0 at the north pole.
struct TileGrid {
  int cols = 6;
  int rows = 4;

  int tile_count() const { return cols * rows; }
  int index_of(int row, int col) const { return row * cols + col; }
  int row_of(int tile) const { return tile / cols; }
  int col_of(int tile) const { return tile % cols; }
};

// Per-tile fraction of the viewport, normalized to sum to 1.
struct FootprintWeights {
  std::vector<double> weights;
};

inline void validate(const ViewportSpec& spec) {
  if (!(spec.hfov_deg > 0.0 && spec.hfov_deg < 180.0) ||
      !(spec.vfov_deg > 0.0 && spec.vfov_deg < 180.0)) {
    throw ValidationError("viewport fields of view must lie in (0, 180) deg");
  }
  if (spec.sample_grid < 8) {
    throw ValidationError("viewport sample_grid must be >= 8");
  }
}

inline void validate(const TileGrid& grid) {
  if (grid.cols < 1 || grid.rows < 1) {
    throw ValidationError("tile grid needs cols >= 1 and rows >= 1");
  }
}

// Wraps any finite angle into [0, 360).
inline double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  return w < 0.0 ? w + 360.0 : w;
}

// phi = yaw wrapped to [0, 360); theta = 90 - pitch clamped to [0, 180],
// so pitch +90 is the north pole and pitch -90 the south pole.
inline SphereDirection yaw_pitch_to_sphere(double yaw_deg, double pitch_deg) {
  return {wrap_degrees(yaw_deg), std::clamp(90.0 - pitch_deg, 0.0, 180.0)};
}

// Equirectangular binning: col = floor(phi / 360 * N), row =
// floor(theta / 180 * M), both clamped so the outer boundary (theta = 180)
// falls into the last row instead of overflowing.
inline int direction_to_tile(const SphereDirection& dir, const TileGrid& grid) {
  const double phi = wrap_degrees(dir.azimuth_deg);
  const double theta = std::clamp(dir.polar_deg, 0.0, 180.0);
  const int col = std::clamp(
      static_cast<int>(std::floor(phi / 360.0 * grid.cols)), 0, grid.cols - 1);
  const int row = std::clamp(
      static_cast<int>(std::floor(theta / 180.0 * grid.rows)), 0,
      grid.rows - 1);
  return grid.index_of(row, col);
}

// Fraction of the viewport falling into each tile. Casts sample_grid^2 rays
// through a pinhole image plane spanning tan(hfov/2) x tan(vfov/2) (endpoints
// included, roll fixed at 0), converts each ray to (phi, theta) and bins it
// on the grid. Counting rays on the sphere absorbs the latitude-dependent
// area distortion of the equirectangular mapping, so a viewport near a pole
// spreads over the whole polar row while an equatorial one stays compact.
inline FootprintWeights viewport_footprint(const SphereDirection& orientation,
                                           const ViewportSpec& spec,
                                           const TileGrid& grid) {
  validate(spec);
  validate(grid);

  const double yaw = wrap_degrees(orientation.azimuth_deg) * kDegToRad;
  const double pitch =
      (90.0 - std::clamp(orientation.polar_deg, 0.0, 180.0)) * kDegToRad;

  const double cy = std::cos(yaw), sy = std::sin(yaw);
  const double cp = std::cos(pitch), sp = std::sin(pitch);
  // Right-handed camera basis at (yaw, pitch), roll 0: forward towards the
  // viewport center, right in the horizontal plane, up completing the frame.
  const double fx = cp * cy, fy = cp * sy, fz = sp;
  const double rx = -sy, ry = cy;
  const double ux = -sp * cy, uy = -sp * sy, uz = cp;

  const double half_w = std::tan(0.5 * spec.hfov_deg * kDegToRad);
  const double half_h = std::tan(0.5 * spec.vfov_deg * kDegToRad);

  const int s = spec.sample_grid;
  std::vector<int> hits(grid.tile_count(), 0);
  for (int j = 0; j < s; ++j) {
    const double b = half_h * (2.0 * j / (s - 1) - 1.0);
    for (int i = 0; i < s; ++i) {
      const double a = half_w * (2.0 * i / (s - 1) - 1.0);
      const double dx = fx + a * rx + b * ux;
      const double dy = fy + a * ry + b * uy;
      const double dz = fz + b * uz;
      const double norm = std::sqrt(dx * dx + dy * dy + dz * dz);
      const double theta =
          std::acos(std::clamp(dz / norm, -1.0, 1.0)) / kDegToRad;
      const double phi = wrap_degrees(std::atan2(dy, dx) / kDegToRad);
      ++hits[direction_to_tile({phi, theta}, grid)];
    }
  }

  FootprintWeights out;
  out.weights.resize(grid.tile_count());
  const double total = static_cast<double>(s) * static_cast<double>(s);
  for (int k = 0; k < grid.tile_count(); ++k) {
    out.weights[k] = static_cast<double>(hits[k]) / total;
  }
  return out;
}

}  // namespace tile360
