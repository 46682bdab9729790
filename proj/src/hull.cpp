#include "specscale/hull.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace specscale {
namespace {

struct Frame {
  Vec3 centroid = Vec3::Zero();
  Mat3 axes = Mat3::Identity();  // columns, by decreasing extent
  Vec3 extent = Vec3::Zero();
};

Frame principal_frame(std::span<const Vec3> pts) {
  Frame f;
  if (pts.empty()) return f;
  for (const auto& p : pts) f.centroid += p;
  f.centroid /= static_cast<double>(pts.size());
  Mat3 cov = Mat3::Zero();
  for (const auto& p : pts) {
    const Vec3 d = p - f.centroid;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  // Eigen sorts ascending; reverse so the widest axis comes first.
  for (int k = 0; k < 3; ++k) f.axes.col(k) = es.eigenvectors().col(2 - k);
  for (const auto& p : pts) {
    const Vec3 c = f.axes.transpose() * (p - f.centroid);
    f.extent = f.extent.cwiseMax(c.cwiseAbs());
  }
  return f;
}

std::vector<Vec3> dedupe(std::span<const Vec3> pts) {
  std::vector<Vec3> v(pts.begin(), pts.end());
  std::sort(v.begin(), v.end(), [](const Vec3& a, const Vec3& b) {
    return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Vec3& a, const Vec3& b) { return (a - b).norm() <= 1e-13; }),
          v.end());
  return v;
}

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

HullMesh planar_hull(const std::vector<Vec3>& pts, const Frame& f, double eps) {
  struct P2 {
    Eigen::Vector2d q;
    int idx;
  };
  std::vector<P2> proj;
  proj.reserve(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const Vec3 c = f.axes.transpose() * (pts[i] - f.centroid);
    proj.push_back({{c.x(), c.y()}, i});
  }
  std::sort(proj.begin(), proj.end(), [](const P2& a, const P2& b) {
    return a.q.x() < b.q.x() || (a.q.x() == b.q.x() && a.q.y() < b.q.y());
  });
  // Andrew's monotone chain; collinear points are dropped.
  std::vector<P2> hull(2 * proj.size());
  std::size_t k = 0;
  for (const auto& p : proj) {
    while (k >= 2 && cross2(hull[k - 2].q, hull[k - 1].q, p.q) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = proj.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross2(hull[k - 2].q, hull[k - 1].q, proj[i].q) <= eps) --k;
    hull[k++] = proj[i];
  }
  hull.resize(k - 1);

  HullMesh mesh;
  mesh.dimension = 2;
  for (const auto& h : hull) mesh.vertices.push_back(pts[h.idx]);
  for (int i = 1; i + 1 < static_cast<int>(mesh.vertices.size()); ++i) {
    mesh.triangles.push_back({0, i, i + 1});
  }
  return mesh;
}

struct Face {
  std::array<int, 3> v;
  Vec3 normal;
  double offset;
  bool alive = true;
};

Face make_face(const std::vector<Vec3>& pts, int a, int b, int c) {
  Face f{{a, b, c}, (pts[b] - pts[a]).cross(pts[c] - pts[a]), 0.0};
  f.normal.normalize();
  f.offset = f.normal.dot(pts[a]);
  return f;
}

bool solid_hull(const std::vector<Vec3>& pts, double eps, HullMesh& mesh) {
  const int n = static_cast<int>(pts.size());
  // Initial simplex from extreme points.
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i].x() < pts[i0].x()) i0 = i;
  }
  auto argmax = [&](auto&& dist) {
    int best = -1;
    double bd = -1.0;
    for (int i = 0; i < n; ++i) {
      const double d = dist(pts[i]);
      if (d > bd) {
        bd = d;
        best = i;
      }
    }
    return std::pair{best, bd};
  };
  auto [i1, d1] = argmax([&](const Vec3& p) { return (p - pts[i0]).norm(); });
  if (d1 <= eps) return false;
  const Vec3 dir = (pts[i1] - pts[i0]).normalized();
  auto [i2, d2] = argmax([&](const Vec3& p) { return (p - pts[i0]).cross(dir).norm(); });
  if (d2 <= eps) return false;
  const Vec3 nrm = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  auto [i3, d3] = argmax([&](const Vec3& p) { return std::abs((p - pts[i0]).dot(nrm)); });
  if (d3 <= eps) return false;

  const Vec3 interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  std::vector<Face> faces;
  auto add = [&](int a, int b, int c) {
    Face f = make_face(pts, a, b, c);
    if (f.normal.dot(interior) - f.offset > 0) {
      std::swap(f.v[1], f.v[2]);
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    faces.push_back(f);
  };
  add(i0, i1, i2);
  add(i0, i1, i3);
  add(i0, i2, i3);
  add(i1, i2, i3);

  std::vector<int> visible;
  std::set<std::pair<int, int>> edges;
  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    visible.clear();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (faces[f].alive && faces[f].normal.dot(pts[p]) - faces[f].offset > eps) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;
    edges.clear();
    for (int f : visible) {
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) edges.emplace(v[e], v[(e + 1) % 3]);
      faces[f].alive = false;
    }
    for (const auto& [a, b] : edges) {
      if (!edges.contains({b, a})) {
        Face nf = make_face(pts, a, b, p);
        faces.push_back(nf);
      }
    }
  }

  std::vector<int> remap(n, -1);
  for (const auto& f : faces) {
    if (!f.alive) continue;
    std::array<int, 3> tri{};
    for (int e = 0; e < 3; ++e) {
      int& r = remap[f.v[e]];
      if (r < 0) {
        r = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(pts[f.v[e]]);
      }
      tri[e] = r;
    }
    mesh.triangles.push_back(tri);
  }
  mesh.dimension = 3;
  return true;
}

}  // namespace

int affine_dimension(std::span<const Vec3> points, double threshold) {
  if (points.empty()) return 0;
  const Frame f = principal_frame(points);
  int dim = 0;
  for (int k = 0; k < 3; ++k) dim += f.extent(k) > threshold ? 1 : 0;
  return dim;
}

HullMesh convex_hull(std::span<const Vec3> points, double dim_threshold) {
  HullMesh mesh;
  if (points.empty()) return mesh;
  const auto pts = dedupe(points);
  const Frame f = principal_frame(pts);
  int dim = 0;
  for (int k = 0; k < 3; ++k) dim += f.extent(k) > dim_threshold ? 1 : 0;
  const double scale = std::max(1.0, f.extent.maxCoeff());
  const double eps = 1e-11 * scale;

  if (dim == 3) {
    HullMesh solid;
    if (solid_hull(pts, eps, solid)) return solid;
    dim = 2;
  }
  if (dim == 2) return planar_hull(pts, f, eps * scale);

  mesh.dimension = dim;
  if (dim == 0) {
    mesh.vertices.push_back(f.centroid);
    return mesh;
  }
  // Segment: extreme points along the principal axis.
  auto key = [&](const Vec3& p) { return f.axes.col(0).dot(p - f.centroid); };
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                      [&](const Vec3& a, const Vec3& b) { return key(a) < key(b); });
  mesh.vertices = {*lo, *hi};
  return mesh;
}

}  // namespace specscale
