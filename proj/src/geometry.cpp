#include "specscale/geometry.hpp"

#include <cmath>
#include <numbers>

namespace specscale {
namespace {

void require_in_plane(const Direction2& t, const Vec3& w) {
  // Component along the plane normal (0, -t2, t1).
  if (std::abs(-t.t2() * w(1) + t.t1() * w(2)) > 1e-10) {
    throw ValidationError("w must lie in span{(1,0,0), (0,t1,t2)}");
  }
}

}  // namespace

FrameTransforms frame_transforms(const Direction2& input) {
  const Direction2 t = input.t1() < 0.0 ? -input : input;
  const double t1 = t.t1();
  const double t2 = t.t2();
  FrameTransforms f{t, 0.0, {}, Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  if (t1 == 0.0) {
    f.theta = t2 > 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
    f.tan_theta = {true, 0.0};
  } else {
    f.theta = std::atan(t2 / t1);
    f.tan_theta = {false, t2 / t1};
  }
  f.q << 1, 0, 0,
         0, t1 * t1, t1 * t2,
         0, t1 * t2, t2 * t2;
  f.r << 1, 0, 0,
         0, t1, -t2,
         0, t2, t1;
  f.pi = f.r.transpose() * f.q;
  return f;
}

double projected_support(const CartesianPair& pair, const Direction2& t, const Vec3& w) {
  require_in_plane(t, w);
  const auto f = frame_transforms(t);
  // Q is symmetric, so h_{Q(B)}(w) = h_B(Q w).
  const Vec3 qw = f.q * w;
  const double len = qw.norm();
  if (len == 0.0) return 0.0;
  return support_value(pair, qw / len) * len;
}

double rotated_scale_support(const CartesianPair& pair, const Direction2& t, const Vec3& w) {
  require_unit(w);
  const auto f = frame_transforms(t);
  // B(A_t) lives in the xy-plane, so only the first two components of R^T w
  // matter.
  const Vec3 v = f.r.transpose() * w;
  const auto lam = detail::eigenvalues_unchecked(a_t(pair, f.t));
  return support_2d(lam, v(0), v(1));
}

double check_theorem_2_1(const CartesianPair& pair, const Direction2& t, int grid_size) {
  if (grid_size < 8) throw ValidationError("grid_size must be at least 8");
  const auto f = frame_transforms(t);
  const Vec3 e_x(1.0, 0.0, 0.0);
  const Vec3 e_t(0.0, f.t.t1(), f.t.t2());
  const auto lam = detail::eigenvalues_unchecked(a_t(pair, f.t));
  double worst = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / grid_size;
    const Vec3 w = std::cos(phi) * e_x + std::sin(phi) * e_t;
    const double lhs = projected_support(pair, f.t, w);
    const Vec3 v = f.r.transpose() * w;
    const double rhs = support_2d(lam, v(0), v(1));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

Direction2 direction_for_root(double r) {
  const double h = std::hypot(1.0, r);
  return {1.0 / h, r / h};
}

HorizontalFaceReport horizontal_faces_3d(const CartesianPair& pair, double tol,
                                         double match_tol) {
  if (pair.a2_is_zero()) throw PreconditionError("horizontal faces require A2 != 0");
  const auto spec = pencil_spectrum_geig(pair, tol);
  if (!spec.regular) {
    throw SingularPencilError("pencil A1 + lambda A2 is singular (det vanishes identically)");
  }
  HorizontalFaceReport rep;
  rep.pencil_reals = spec.real_subset;
  rep.pencil_infinity = spec.has_infinity;

  auto probe = [&](const Direction2& t, const TanTheta& root) {
    const auto face = exposed_face(pair, Vec3(0.0, t.t1(), t.t2()), tol);
    if (face.x_extent <= tol) {
      rep.unmatched_roots.push_back(root);
      return;
    }
    rep.faces.push_back(face);
    const TanTheta& tt = *face.tan_theta;
    const bool same = root.infinite
                          ? tt.infinite
                          : !tt.infinite && std::abs(tt.value - root.value) <=
                                                match_tol * (1.0 + std::abs(root.value));
    if (same) {
      rep.matched.push_back({face, root});
    } else {
      rep.unmatched_faces.push_back(face);
      rep.unmatched_roots.push_back(root);
    }
  };
  for (double r : spec.real_subset) probe(direction_for_root(r), {false, r});
  if (spec.has_infinity) probe(Direction2(0.0, 1.0), {true, 0.0});
  return rep;
}

}  // namespace specscale
