#pragma once

#include <complex>

#include <Eigen/Dense>

#include "specscale/errors.hpp"

namespace specscale {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kHermitTol = 1e-12;
inline constexpr double kSplitTol = 1e-10;

/// Spectral norm (largest singular value).
double op_norm(const ComplexMatrix& m);

/// Smallest singular value.
double sigma_min(const ComplexMatrix& m);

/// ||M - M*|| / (1 + ||M||), the quantity compared against hermit_tol.
double hermitian_residual(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitTol);

/// Throws DimensionError for empty or non-square input, ValidationError for
/// NaN/Inf entries.
void require_square_finite(const ComplexMatrix& m, const char* what = "matrix");

/// Hermitian pair (A1, A2) with A = A1 + i A2.
class CartesianPair {
 public:
  /// Validates both parts against the Hermitian invariant.
  CartesianPair(ComplexMatrix a1, ComplexMatrix a2, double hermit_tol = kHermitTol);

  const ComplexMatrix& a1() const { return a1_; }
  const ComplexMatrix& a2() const { return a2_; }
  Eigen::Index n() const { return a1_.rows(); }
  bool a2_is_zero() const { return a2_is_zero_; }

  /// A1 + i A2.
  ComplexMatrix full() const;

 private:
  ComplexMatrix a1_;
  ComplexMatrix a2_;
  bool a2_is_zero_ = false;
};

/// Unit vector (t1, t2) in the plane.
class Direction2 {
 public:
  Direction2(double t1, double t2);
  static Direction2 from_angle(double theta);

  double t1() const { return t1_; }
  double t2() const { return t2_; }
  Direction2 operator-() const { return Direction2(-t1_, -t2_); }

 private:
  double t1_;
  double t2_;
};

struct EigenDecomposition {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // columns
};

struct SpectralProjections {
  ComplexMatrix plus;
  ComplexMatrix zero;
  ComplexMatrix minus;
};

CartesianPair cartesian_decompose(const ComplexMatrix& a);

Complex normalized_trace(const ComplexMatrix& m);

EigenDecomposition hermitian_eigs(const ComplexMatrix& m);

/// Eigenvalues only, ascending. Same validation as hermitian_eigs.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigenvalue threshold used by spectral_split: tol * max(1, ||m||).
double split_threshold(const Eigen::VectorXd& ascending_values, double tol);

/// Orthogonal projections onto the positive, null and negative eigenspaces.
/// An eigenvalue counts as zero when |lambda| <= tol * max(1, ||m||).
SpectralProjections spectral_split(const ComplexMatrix& m, double tol = kSplitTol);

/// A_t = t1 A1 + t2 A2.
ComplexMatrix a_t(const CartesianPair& pair, const Direction2& t);

namespace detail {
// Skip validation; for matrices Hermitian by construction in inner loops.
Eigen::VectorXd eigenvalues_unchecked(const ComplexMatrix& m);
EigenDecomposition eigs_unchecked(const ComplexMatrix& m);
}  // namespace detail

}  // namespace specscale
