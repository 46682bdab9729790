#pragma once

#include <array>
#include <span>
#include <vector>

#include "specscale/linalg.hpp"

namespace specscale {

/// Triangulated convex hull of a point cloud. For affine dimension <= 2 the
/// hull is a flat polygon (fan-triangulated), a segment, or a point.
struct HullMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  int dimension = 0;
};

/// Number of principal axes along which the centered cloud extends more
/// than `threshold`.
int affine_dimension(std::span<const Vec3> points, double threshold = 1e-8);

HullMesh convex_hull(std::span<const Vec3> points, double dim_threshold = 1e-8);

}  // namespace specscale
