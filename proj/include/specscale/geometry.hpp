#pragma once

#include <optional>
#include <vector>

#include "specscale/pencil.hpp"
#include "specscale/scale.hpp"

namespace specscale {

/// theta_t, the projection Q_t onto span{(1,0,0), (0,t1,t2)}, the rotation
/// R_t about the x-axis by theta_t, and the map pi_t = R_t^T Q_t.
/// Directions with t1 < 0 are replaced by -t (same A_t kernel, same Q_t).
struct FrameTransforms {
  Direction2 t;  // canonical
  double theta = 0.0;
  TanTheta tan_theta;
  Mat3 q;
  Mat3 r;
  Mat3 pi;
};

FrameTransforms frame_transforms(const Direction2& t);

/// Support function of Q_t(B(A)) at an in-plane direction w.
double projected_support(const CartesianPair& pair, const Direction2& t, const Vec3& w);

/// Support function of R_t(B(A_t)) at a unit direction w, from the
/// eigenvalues of A_t.
double rotated_scale_support(const CartesianPair& pair, const Direction2& t, const Vec3& w);

/// max |projected_support - rotated_scale_support| over `grid_size` uniformly
/// spaced in-plane unit directions.
double check_theorem_2_1(const CartesianPair& pair, const Direction2& t, int grid_size);

inline constexpr double kMatchTol = 1e-6;

struct FaceRootMatch {
  FaceDescriptor face;
  TanTheta root;
};

/// Horizontal faces of B(A) (exposed by (0,t1,t2) with positive x-extent)
/// matched against the real pencil spectrum and the point at infinity.
struct HorizontalFaceReport {
  std::vector<FaceDescriptor> faces;
  std::vector<double> pencil_reals;
  bool pencil_infinity = false;
  std::vector<FaceRootMatch> matched;
  std::vector<FaceDescriptor> unmatched_faces;
  std::vector<TanTheta> unmatched_roots;
};

/// Throws PreconditionError when A2 = 0 and SingularPencilError when the
/// pencil is singular.
HorizontalFaceReport horizontal_faces_3d(const CartesianPair& pair, double tol = kPencilTol,
                                         double match_tol = kMatchTol);

/// Unit t with tan(theta_t) = r, t1 > 0.
Direction2 direction_for_root(double r);

}  // namespace specscale
