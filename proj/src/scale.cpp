#include "specscale/scale.hpp"

#include <cmath>
#include <numbers>

#include "specscale/parallel.hpp"

namespace specscale {
namespace {

// (tau(P), tau(A1 P), tau(A2 P)) for P = V V*, V with orthonormal columns.
Vec3 scale_point(const CartesianPair& pair, const ComplexMatrix& v) {
  const double n = static_cast<double>(pair.n());
  if (v.cols() == 0) return Vec3::Zero();
  return {static_cast<double>(v.cols()) / n,
          (v.adjoint() * pair.a1() * v).trace().real() / n,
          (v.adjoint() * pair.a2() * v).trace().real() / n};
}

struct SplitColumns {
  ComplexMatrix plus;
  ComplexMatrix zero;
};

SplitColumns split_columns(const EigenDecomposition& eig, double tol) {
  const double thr = split_threshold(eig.values, tol);
  const Eigen::Index n = eig.values.size();
  Eigen::Index first_zero = 0;
  while (first_zero < n && eig.values(first_zero) < -thr) ++first_zero;
  Eigen::Index first_plus = first_zero;
  while (first_plus < n && eig.values(first_plus) <= thr) ++first_plus;
  return {eig.vectors.rightCols(n - first_plus),
          eig.vectors.middleCols(first_zero, first_plus - first_zero)};
}

// Real inner product <X, Y> = Re tr(X Y) on Hermitian matrices.
double herm_dot(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x.adjoint().cwiseProduct(y)).sum().real();
}

}  // namespace

ComplexMatrix support_matrix(const CartesianPair& pair, const Vec3& u) {
  ComplexMatrix m = u(1) * pair.a1() + u(2) * pair.a2();
  m.diagonal().array() += u(0);
  return m;
}

void require_unit(const Vec3& u) {
  if (!u.allFinite() || std::abs(u.squaredNorm() - 1.0) > 1e-12) {
    throw ValidationError("direction u must be a unit vector");
  }
}

double support_value(const CartesianPair& pair, const Vec3& u) {
  require_unit(u);
  const Eigen::VectorXd lam = detail::eigenvalues_unchecked(support_matrix(pair, u));
  return lam.cwiseMax(0.0).sum() / static_cast<double>(pair.n());
}

SupportSample support_sample(const CartesianPair& pair, const Vec3& u, double tol) {
  require_unit(u);
  const auto eig = detail::eigs_unchecked(support_matrix(pair, u));
  const auto cols = split_columns(eig, tol);
  return {u, eig.values.cwiseMax(0.0).sum() / static_cast<double>(pair.n()),
          scale_point(pair, cols.plus)};
}

FaceDescriptor exposed_face(const CartesianPair& pair, const Vec3& u, double tol) {
  require_unit(u);
  const auto eig = detail::eigs_unchecked(support_matrix(pair, u));
  const auto cols = split_columns(eig, tol);
  FaceDescriptor face;
  face.u = u;
  face.base = scale_point(pair, cols.plus);
  const Eigen::Index k = cols.zero.cols();
  face.x_extent = static_cast<double>(k) / static_cast<double>(pair.n());

  if (k > 0) {
    // The face is the image of {0 <= H <= I_k} under
    // H -> (tr H, tr(B1 H), tr(B2 H)) / n, so its dimension is the rank of
    // span{I, B1, B2} among k x k Hermitian matrices.
    const ComplexMatrix basis[3] = {ComplexMatrix::Identity(k, k),
                                    cols.zero.adjoint() * pair.a1() * cols.zero,
                                    cols.zero.adjoint() * pair.a2() * cols.zero};
    Mat3 gram;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) gram(i, j) = herm_dot(basis[i], basis[j]);
    }
    const Vec3 ev = Eigen::SelfAdjointEigenSolver<Mat3>(gram).eigenvalues().cwiseMax(0.0);
    const Vec3 sv = ev.cwiseSqrt();
    const double cut = 1e-8 * std::max(1.0, sv.maxCoeff());
    int rank = 0;
    for (int i = 0; i < 3; ++i) rank += sv(i) > cut ? 1 : 0;
    // Exposed faces are proper, so at most 2-dimensional.
    face.dimension = std::min(rank, 2);
  }

  if (std::abs(u(0)) <= 1e-12) {
    const double r = std::hypot(u(1), u(2));
    const Direction2 t(u(1) / r, u(2) / r);
    face.t = t;
    face.tan_theta = std::abs(t.t1()) <= 1e-15 ? TanTheta{true, 0.0}
                                               : TanTheta{false, t.t2() / t.t1()};
  }
  return face;
}

double support_2d(const Eigen::VectorXd& eigenvalues, double a, double b) {
  return (a + b * eigenvalues.array()).cwiseMax(0.0).sum() /
         static_cast<double>(eigenvalues.size());
}

ScalePolygon2D scale_polygon_selfadjoint(const ComplexMatrix& m) {
  const Eigen::VectorXd lam = hermitian_eigenvalues(m);
  const Eigen::Index n = lam.size();
  const double nd = static_cast<double>(n);
  const double merge = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());

  // Group runs of (numerically) equal eigenvalues: [begin, end).
  std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i + 1;
    while (j < n && lam(j) - lam(i) <= merge) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::vector<double> prefix(n + 1, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + lam(i);
  const double total = prefix[n];

  ScalePolygon2D poly;
  poly.lower_vertices.push_back({0.0, 0.0});
  for (const auto& [b, e] : groups) {
    poly.lower_vertices.push_back({static_cast<double>(e) / nd, prefix[e] / nd});
    poly.segment_slopes.push_back((prefix[e] - prefix[b]) / static_cast<double>(e - b));
  }
  // Upper chain takes the largest eigenvalues first.
  poly.upper_vertices.push_back({0.0, 0.0});
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const auto [b, e] = *it;
    const Eigen::Index taken = n - b;
    poly.upper_vertices.push_back({static_cast<double>(taken) / nd, (total - prefix[b]) / nd});
    poly.upper_slopes.push_back((prefix[e] - prefix[b]) / static_cast<double>(e - b));
  }
  poly.upper_vertices.back() = poly.lower_vertices.back();
  return poly;
}

std::vector<Segment2D> horizontal_segments_2d(const ScalePolygon2D& poly, double tol) {
  double scale = 1.0;
  for (double s : poly.segment_slopes) scale = std::max(scale, std::abs(s));
  const double thr = tol * scale;
  std::vector<Segment2D> out;
  auto scan = [&](const std::vector<Point2>& verts, const std::vector<double>& slopes, Chain c) {
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      if (std::abs(slopes[i]) <= thr) out.push_back({verts[i], verts[i + 1], c, slopes[i]});
    }
  };
  scan(poly.lower_vertices, poly.segment_slopes, Chain::lower);
  scan(poly.upper_vertices, poly.upper_slopes, Chain::upper);
  return out;
}

std::vector<Vec3> fibonacci_directions(int count) {
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.push_back(Vec3(r * std::cos(phi), r * std::sin(phi), z).normalized());
  }
  return dirs;
}

ScaleBody3D scale_body(const CartesianPair& pair, int n_directions, int threads) {
  if (n_directions < 20) throw ValidationError("scale_body needs at least 20 directions");
  const auto dirs = fibonacci_directions(n_directions);
  ScaleBody3D body;
  body.samples.resize(dirs.size());
  parallel_for(dirs.size(), threads,
               [&](std::size_t i) { body.samples[i] = support_sample(pair, dirs[i]); });

  std::vector<Vec3> pts;
  pts.reserve(body.samples.size() + 2);
  for (const auto& s : body.samples) pts.push_back(s.p);
  // C = 0 and C = I: exposed by -e_x and e_x, which the sphere sampling may miss.
  pts.push_back(Vec3::Zero());
  pts.push_back(Vec3(1.0, normalized_trace(pair.a1()).real(), normalized_trace(pair.a2()).real()));
  auto hull = convex_hull(pts);
  body.hull_vertices = std::move(hull.vertices);
  body.hull_triangles = std::move(hull.triangles);
  body.affine_dimension = affine_dimension(pts);
  return body;
}

}  // namespace specscale
