#include <doctest.h>

#include <map>

#include "specscale/hull.hpp"
#include "specscale/random.hpp"

using namespace specscale;

namespace {

bool closed_manifold(const HullMesh& m) {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : m.triangles) {
    for (int e = 0; e < 3; ++e) directed[{t[e], t[(e + 1) % 3]}]++;
  }
  for (const auto& [e, c] : directed) {
    if (c != 1 || !directed.contains({e.second, e.first})) return false;
  }
  const long edges = static_cast<long>(directed.size()) / 2;
  return static_cast<long>(m.vertices.size()) - edges + static_cast<long>(m.triangles.size()) == 2;
}

}  // namespace

TEST_CASE("cube with interior and face points") {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  pts.emplace_back(0.5, 0.5, 0.5);
  pts.emplace_back(0.5, 0.5, 1.0);  // on a face
  pts.emplace_back(0.0, 0.0, 0.0);  // duplicate
  const auto m = convex_hull(pts);
  CHECK(m.dimension == 3);
  CHECK(m.vertices.size() == 8);
  CHECK(m.triangles.size() == 12);
  CHECK(closed_manifold(m));
  // Outward orientation: centroid is on the inner side of every triangle.
  const Vec3 c(0.5, 0.5, 0.5);
  for (const auto& t : m.triangles) {
    const Vec3 nrm = (m.vertices[t[1]] - m.vertices[t[0]]).cross(m.vertices[t[2]] - m.vertices[t[0]]);
    CHECK(nrm.dot(c - m.vertices[t[0]]) < 0);
  }
}

TEST_CASE("random points on a sphere give a closed hull") {
  Rng rng = case_rng(1, 0, 0);
  std::vector<Vec3> pts;
  for (int i = 0; i < 1500; ++i) pts.push_back(random_unit3(rng));
  const auto m = convex_hull(pts);
  CHECK(m.dimension == 3);
  CHECK(m.vertices.size() == 1500);
  CHECK(closed_manifold(m));
}

TEST_CASE("degenerate clouds") {
  std::vector<Vec3> plane;
  for (int i = 0; i < 20; ++i) plane.emplace_back(std::cos(i * 0.3), std::sin(i * 0.3), 2.0);
  plane.emplace_back(0.0, 0.0, 2.0);
  const auto m2 = convex_hull(plane);
  CHECK(m2.dimension == 2);
  CHECK(m2.vertices.size() == 20);
  CHECK(m2.triangles.size() == 18);

  const std::vector<Vec3> line = {{0, 0, 0}, {1, 1, 1}, {0.5, 0.5, 0.5}, {2, 2, 2}};
  const auto m1 = convex_hull(line);
  CHECK(m1.dimension == 1);
  REQUIRE(m1.vertices.size() == 2);
  CHECK(m1.triangles.empty());
  CHECK(affine_dimension(line) == 1);

  const std::vector<Vec3> dot = {{1, 2, 3}, {1, 2, 3}};
  const auto m0 = convex_hull(dot);
  CHECK(m0.dimension == 0);
  CHECK(m0.vertices.size() == 1);

  CHECK(convex_hull(std::vector<Vec3>{}).vertices.empty());
}

TEST_CASE("affine_dimension threshold") {
  const std::vector<Vec3> thin = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1e-10}};
  CHECK(affine_dimension(thin) == 2);
  CHECK(affine_dimension(thin, 1e-12) == 3);
}
