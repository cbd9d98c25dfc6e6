#pragma once

#include "eur/applications.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace eur::testing {

inline constexpr double kPi = std::numbers::pi;

// Plain scalar entropy, written out independently of the library.
inline double entropy_bits(std::initializer_list<double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0) h -= x * std::log(x) / std::log(2.0);
  return h;
}

inline double unitarity_residual(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

inline CMatrix random_hermitian(int d, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (a + a.adjoint());
}

inline ProjectiveMeasurement random_basis(int d, Rng& rng) {
  return ProjectiveMeasurement::from_basis(haar_random_unitary(d, rng));
}

inline OverlapMatrix random_unistochastic(int d, std::uint64_t seed) {
  return from_unitary(haar_random_unitary(d, seed));
}

// Pure product state |a> (x) |b> with Haar random local vectors.
inline Eigen::VectorXcd random_product_vector(int da, int db, Rng& rng) {
  const Eigen::VectorXcd a = haar_random_unitary(da, rng).col(0);
  const Eigen::VectorXcd b = haar_random_unitary(db, rng).col(0);
  Eigen::VectorXcd v(da * db);
  for (int i = 0; i < da; ++i) v.segment(i * db, db) = a(i) * b;
  return v;
}

// Convex mixture of at most `terms` random product states.
inline DensityMatrix random_separable(int da, int db, int terms, Rng& rng) {
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  const int k = count(rng);
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) total += (x = weight(rng) + 1e-3);
  CMatrix rho = CMatrix::Zero(da * db, da * db);
  for (int i = 0; i < k; ++i) {
    const Eigen::VectorXcd v = random_product_vector(da, db, rng);
    rho += (w[i] / total) * v * v.adjoint();
  }
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix::from(rho);
}

// Kronecker product of two local bases as a joint measurement.
inline ProjectiveMeasurement product_basis(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return ProjectiveMeasurement::from_basis(k);
}

}  // namespace eur::testing
