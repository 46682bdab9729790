#include "specscale/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace specscale {
namespace {

void require_nonzero_a2(const CartesianPair& pair) {
  if (pair.a2_is_zero()) {
    throw PreconditionError("pencil operations require A2 != 0 (A is self-adjoint)");
  }
}

void finish(PencilSpectrum& spec, double tol) {
  const auto rr = real_roots(spec.finite, tol);
  spec.real_subset = rr.values;
  spec.real_multiplicity = rr.multiplicity;
}

// Newton iteration on f(lambda) = det(A1 + lambda A2), using
// f'/f = tr((A1 + lambda A2)^-1 A2). Steps that wander more than a small
// distance from the starting root are rejected so that clustered roots are
// never merged.
Complex polish_root(const CartesianPair& pair, Complex lam, bool real) {
  const Complex start = lam;
  const double leash = 1e-4 * (1.0 + std::abs(start));
  for (int it = 0; it < 8; ++it) {
    const ComplexMatrix m = pair.a1() + lam * pair.a2();
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    const Complex d = lu.determinant();
    if (d == Complex(0.0)) break;
    const Complex logder = lu.solve(pair.a2()).trace();
    if (!std::isfinite(logder.real()) || !std::isfinite(logder.imag()) || logder == Complex(0.0)) {
      break;
    }
    Complex step = 1.0 / logder;
    if (real) step = step.real();
    const Complex next = lam - step;
    if (std::abs(next - start) > leash) return start;
    lam = next;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(lam))) break;
  }
  return lam;
}

}  // namespace

std::string to_string(PencilMethod m) {
  return m == PencilMethod::geig ? "generalized-eig" : "det-poly";
}

bool a2_singular(const CartesianPair& pair, double tol) {
  return sigma_min(pair.a2()) <= tol * op_norm(pair.a2());
}

PencilSpectrum pencil_spectrum_geig(const CartesianPair& pair, double tol) {
  require_nonzero_a2(pair);
  const int n = static_cast<int>(pair.n());
  // zggev overwrites its inputs.
  ComplexMatrix a = pair.a1();
  ComplexMatrix b = pair.a2();
  std::vector<Complex> alpha(n), beta(n);
  Complex dummy;
  const int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, b.data(), n,
                                 alpha.data(), beta.data(), &dummy, 1, &dummy, 1);
  if (info != 0) throw Error("zggev failed with info = " + std::to_string(info));

  const double na = op_norm(pair.a1());
  const double nb = op_norm(pair.a2());
  PencilSpectrum spec;
  spec.method = PencilMethod::geig;
  spec.has_infinity = a2_singular(pair, tol);
  for (int k = 0; k < n; ++k) {
    const bool alpha_zero = std::abs(alpha[k]) <= tol * na;
    const bool beta_zero = std::abs(beta[k]) <= tol * nb;
    if (alpha_zero && beta_zero) {
      // A (0,0) pair means det(A1 + lambda A2) vanishes identically.
      spec.regular = false;
      spec.finite.clear();
      spec.real_subset.clear();
      spec.real_multiplicity.clear();
      return spec;
    }
    // A1 x = mu A2 x  <=>  (A1 + lambda A2) x = 0 with lambda = -mu.
    if (!beta_zero) spec.finite.push_back(-alpha[k] / beta[k]);
  }
  finish(spec, tol);
  return spec;
}

Eigen::VectorXd DetPolynomial::coefficients() const {
  Eigen::VectorXd c(degree + 1);
  double pw = 1.0;
  for (int k = 0; k <= degree; ++k) {
    c(k) = scaled_coefficients(k) / pw;
    pw *= scale;
  }
  return c;
}

DetPolynomial det_polynomial(const CartesianPair& pair, double tol) {
  require_nonzero_a2(pair);
  const int n = static_cast<int>(pair.n());
  const double na = op_norm(pair.a1());
  const double nb = op_norm(pair.a2());
  DetPolynomial poly;
  poly.scale = std::max(1.0, na / nb);

  // Chebyshev nodes on [-1, 1]; lambda = scale * x is real, so A1 + lambda A2
  // is Hermitian and its determinant real.
  const int m = n + 1;
  Eigen::MatrixXd vander(m, m);
  Eigen::VectorXd dets(m);
  for (int k = 0; k < m; ++k) {
    const double x = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * m));
    double pw = 1.0;
    for (int j = 0; j < m; ++j) {
      vander(k, j) = pw;
      pw *= x;
    }
    const ComplexMatrix p = pair.a1() + (poly.scale * x) * pair.a2();
    dets(k) = Eigen::PartialPivLU<ComplexMatrix>(p).determinant().real();
  }
  poly.scaled_coefficients = vander.colPivHouseholderQr().solve(dets);

  const double magnitude = std::pow(na + poly.scale * nb, n);
  const double cmax = poly.scaled_coefficients.cwiseAbs().maxCoeff();
  if (cmax <= tol * magnitude) {
    poly.identically_zero = true;
    poly.degree = 0;
    return poly;
  }
  poly.degree = n;
  while (poly.degree > 0 && std::abs(poly.scaled_coefficients(poly.degree)) <= tol * cmax) {
    --poly.degree;
  }
  return poly;
}

PencilSpectrum pencil_spectrum_detpoly(const CartesianPair& pair, double tol) {
  const DetPolynomial poly = det_polynomial(pair, tol);
  PencilSpectrum spec;
  spec.method = PencilMethod::detpoly;
  if (poly.identically_zero) {
    spec.regular = false;
    spec.has_infinity = a2_singular(pair, tol);
    return spec;
  }
  spec.has_infinity = poly.degree < pair.n() || a2_singular(pair, tol);

  const int d = poly.degree;
  if (d > 0) {
    const auto& q = poly.scaled_coefficients;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -q(i) / q(d);
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    for (int i = 0; i < d; ++i) {
      const Complex x = es.eigenvalues()(i);
      const bool real = x.imag() == 0.0;
      spec.finite.push_back(polish_root(pair, poly.scale * x, real));
    }
  }
  finish(spec, tol);
  return spec;
}

RealRoots real_roots(const std::vector<Complex>& finite, double tol) {
  std::vector<double> reals;
  for (const auto& z : finite) {
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) reals.push_back(z.real());
  }
  std::sort(reals.begin(), reals.end());
  RealRoots out;
  for (std::size_t i = 0; i < reals.size();) {
    std::size_t j = i + 1;
    while (j < reals.size() && reals[j] - reals[i] <= tol * (1.0 + std::abs(reals[i]))) ++j;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) sum += reals[k];
    out.values.push_back(sum / static_cast<double>(j - i));
    out.multiplicity.push_back(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::vector<double> real_subset(const PencilSpectrum& spec, double tol) {
  return real_roots(spec.finite, tol).values;
}

}  // namespace specscale
