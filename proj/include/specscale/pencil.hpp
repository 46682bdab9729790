#pragma once

#include <string>
#include <vector>

#include "specscale/linalg.hpp"

namespace specscale {

inline constexpr double kPencilTol = 1e-8;

enum class PencilMethod { geig, detpoly };

std::string to_string(PencilMethod m);

/// Spectrum of P(lambda) = A1 + lambda A2. The point at infinity is carried
/// by `has_infinity` and never appears in `finite` or `real_subset`.
/// A singular pencil (det P identically zero) has regular = false and an
/// empty finite list.
struct PencilSpectrum {
  bool regular = true;
  std::vector<Complex> finite;  // with algebraic multiplicity
  bool has_infinity = false;
  std::vector<double> real_subset;       // deduplicated, ascending
  std::vector<int> real_multiplicity;    // parallel to real_subset
  PencilMethod method = PencilMethod::geig;
};

/// det(A1 + lambda A2) recovered by interpolation in x = lambda / scale.
struct DetPolynomial {
  double scale = 1.0;
  Eigen::VectorXd scaled_coefficients;  // ascending powers of x
  int degree = 0;                       // after trimming negligible leading terms
  bool identically_zero = false;

  /// Coefficients in ascending powers of lambda, up to `degree`.
  Eigen::VectorXd coefficients() const;
};

/// Def. of the point at infinity: sigma_min(A2) <= tol * ||A2||.
bool a2_singular(const CartesianPair& pair, double tol = kPencilTol);

PencilSpectrum pencil_spectrum_geig(const CartesianPair& pair, double tol = kPencilTol);

DetPolynomial det_polynomial(const CartesianPair& pair, double tol = kPencilTol);

PencilSpectrum pencil_spectrum_detpoly(const CartesianPair& pair, double tol = kPencilTol);

struct RealRoots {
  std::vector<double> values;
  std::vector<int> multiplicity;
};

/// Real parts of finite lambda with |Im lambda| <= tol (1 + |lambda|), merged
/// within tol (1 + |lambda|).
RealRoots real_roots(const std::vector<Complex>& finite, double tol = kPencilTol);

std::vector<double> real_subset(const PencilSpectrum& spec, double tol = kPencilTol);

}  // namespace specscale
