#include "specscale/linalg.hpp"

#include <cmath>
#include <sstream>

namespace specscale {

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double sigma_min(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double hermitian_residual(const ComplexMatrix& m) {
  return op_norm(m - m.adjoint()) / (1.0 + op_norm(m));
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && hermitian_residual(m) <= tol;
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << " must be square with n >= 1 (got " << m.rows() << "x" << m.cols() << ")";
    throw DimensionError(os.str());
  }
  if (!m.allFinite()) throw ValidationError(std::string(what) + " has non-finite entries");
}

CartesianPair::CartesianPair(ComplexMatrix a1, ComplexMatrix a2, double hermit_tol)
    : a1_(std::move(a1)), a2_(std::move(a2)) {
  require_square_finite(a1_, "A1");
  require_square_finite(a2_, "A2");
  if (a1_.rows() != a2_.rows()) throw DimensionError("A1 and A2 dimensions differ");
  for (auto [m, name] : {std::pair{&a1_, "A1"}, std::pair{&a2_, "A2"}}) {
    const double r = hermitian_residual(*m);
    if (r > hermit_tol) {
      std::ostringstream os;
      os.precision(3);
      os << name << " is not Hermitian (residual " << r << " > " << hermit_tol << ")";
      throw ValidationError(os.str());
    }
  }
  a2_is_zero_ = a2_.cwiseAbs().maxCoeff() == 0.0;
}

ComplexMatrix CartesianPair::full() const { return a1_ + Complex(0.0, 1.0) * a2_; }

Direction2::Direction2(double t1, double t2) : t1_(t1), t2_(t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2) || std::abs(t1 * t1 + t2 * t2 - 1.0) > 1e-12) {
    throw ValidationError("direction t must satisfy t1^2 + t2^2 = 1");
  }
}

Direction2 Direction2::from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

CartesianPair cartesian_decompose(const ComplexMatrix& a) {
  require_square_finite(a, "A");
  const ComplexMatrix adj = a.adjoint();
  ComplexMatrix a1 = 0.5 * (a + adj);
  ComplexMatrix a2 = Complex(0.0, -0.5) * (a - adj);
  // Force exact Hermitian symmetry so downstream checks see zero residual.
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    a1(i, i) = a1(i, i).real();
    a2(i, i) = a2(i, i).real();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a1(j, i) = std::conj(a1(i, j));
      a2(j, i) = std::conj(a2(i, j));
    }
  }
  return CartesianPair(std::move(a1), std::move(a2));
}

Complex normalized_trace(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw DimensionError("trace of non-square matrix");
  return m.trace() / static_cast<double>(m.rows());
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
  require_square_finite(m);
  const double r = hermitian_residual(m);
  if (r > kHermitTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (residual " << r << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

EigenDecomposition hermitian_eigs(const ComplexMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double split_threshold(const Eigen::VectorXd& values, double tol) {
  const double norm = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  return tol * std::max(1.0, norm);
}

SpectralProjections spectral_split(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eigs(m);
  const double thr = split_threshold(eig.values, tol);
  const Eigen::Index n = m.rows();
  SpectralProjections out{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n),
                          ComplexMatrix::Zero(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lam = eig.values(k);
    ComplexMatrix& target = lam > thr ? out.plus : (lam < -thr ? out.minus : out.zero);
    target.noalias() += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return out;
}

namespace detail {

Eigen::VectorXd eigenvalues_unchecked(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

EigenDecomposition eigs_unchecked(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace detail

ComplexMatrix a_t(const CartesianPair& pair, const Direction2& t) {
  return t.t1() * pair.a1() + t.t2() * pair.a2();
}

}  // namespace specscale
