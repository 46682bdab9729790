#include "specscale/random.hpp"

#include <cmath>
#include <numbers>

namespace specscale {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    h(i, i) = h(i, i).real();
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) h(j, i) = std::conj(h(i, j));
  }
  return h;
}

}  // namespace

Rng case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index));
}

ComplexMatrix random_gaussian(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) { return hermitize(random_gaussian(n, rng)); }

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix random_normal(Eigen::Index n, Rng& rng) {
  const ComplexMatrix u = random_unitary(n, rng);
  std::normal_distribution<double> g;
  Eigen::VectorXcd z(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = g(rng);
    const double im = g(rng);
    z(k) = Complex(re, im);
  }
  return u * z.asDiagonal() * u.adjoint();
}

CartesianPair random_hermitian_pair(Eigen::Index n, Rng& rng) {
  ComplexMatrix a1 = random_hermitian(n, rng);
  ComplexMatrix a2 = random_hermitian(n, rng);
  return CartesianPair(std::move(a1), std::move(a2));
}

CartesianPair random_singular_pair(Eigen::Index n, Rng& rng) {
  const ComplexMatrix w = random_unitary(n, rng);
  std::normal_distribution<double> g;
  Eigen::VectorXd a(n), b(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    a(k) = g(rng);
    b(k) = g(rng);
  }
  a(n - 1) = 0.0;
  b(n - 1) = 0.0;
  const ComplexMatrix a1 = w * a.cast<Complex>().asDiagonal() * w.adjoint();
  const ComplexMatrix a2 = w * b.cast<Complex>().asDiagonal() * w.adjoint();
  return CartesianPair(hermitize(a1), hermitize(a2));
}

Direction2 random_direction(Rng& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  return Direction2::from_angle(u(rng));
}

Vec3 random_unit3(Rng& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    const double x = g(rng);
    const double y = g(rng);
    const double z = g(rng);
    v = Vec3(x, y, z);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace specscale
