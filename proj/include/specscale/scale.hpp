#pragma once

#include <optional>
#include <vector>

#include "specscale/hull.hpp"
#include "specscale/linalg.hpp"

namespace specscale {

/// A support value h(u) of B(A) together with an exposed point attaining it.
struct SupportSample {
  Vec3 u;
  double h = 0.0;
  Vec3 p;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Exact spectral scale of a self-adjoint matrix: a convex polygon bounded by
/// a convex lower chain and a concave upper chain from (0,0) to (1, tau(M)).
struct ScalePolygon2D {
  std::vector<Point2> lower_vertices;
  std::vector<Point2> upper_vertices;
  std::vector<double> segment_slopes;  // lower chain, non-decreasing
  std::vector<double> upper_slopes;    // upper chain, non-increasing
};

enum class Chain { lower, upper };

struct Segment2D {
  Point2 from;
  Point2 to;
  Chain chain;
  double slope;
};

struct ScaleBody3D {
  std::vector<SupportSample> samples;
  std::vector<Vec3> hull_vertices;
  std::vector<std::array<int, 3>> hull_triangles;
  int affine_dimension = 0;
};

/// tan(theta_t) as carried by a face: finite value or the point at infinity.
struct TanTheta {
  bool infinite = false;
  double value = 0.0;
};

/// Exposed face of B(A) in direction u: {base + image(D) : 0 <= D <= P0}.
struct FaceDescriptor {
  Vec3 u;
  Vec3 base;
  double x_extent = 0.0;
  int dimension = 0;
  std::optional<Direction2> t;       // set when u = (0, t1, t2)
  std::optional<TanTheta> tan_theta;
};

/// M(u) = u0 I + u1 A1 + u2 A2.
ComplexMatrix support_matrix(const CartesianPair& pair, const Vec3& u);

/// Throws ValidationError unless |u| = 1 within 1e-12.
void require_unit(const Vec3& u);

/// h(u) = (1/n) sum_i max(lambda_i(M(u)), 0).
double support_value(const CartesianPair& pair, const Vec3& u);

/// h(u) with the exposed point (tau(P+), tau(A1 P+), tau(A2 P+)).
SupportSample support_sample(const CartesianPair& pair, const Vec3& u, double tol = kSplitTol);

FaceDescriptor exposed_face(const CartesianPair& pair, const Vec3& u, double tol = kSplitTol);

/// Support function of B(M) for Hermitian M at a (not necessarily unit)
/// planar direction (a, b), given the eigenvalues of M.
double support_2d(const Eigen::VectorXd& eigenvalues, double a, double b);

ScalePolygon2D scale_polygon_selfadjoint(const ComplexMatrix& m);

std::vector<Segment2D> horizontal_segments_2d(const ScalePolygon2D& poly, double tol);

/// Deterministic Fibonacci-sphere directions.
std::vector<Vec3> fibonacci_directions(int count);

inline constexpr int kDefaultDirections = 2000;

/// Samples h on `n_directions` Fibonacci directions and builds the hull of
/// the exposed points. `threads` <= 1 runs serially; output is identical.
ScaleBody3D scale_body(const CartesianPair& pair, int n_directions = kDefaultDirections,
                       int threads = 1);

}  // namespace specscale
