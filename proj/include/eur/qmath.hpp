#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace eur {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Unit for every entropy and every logarithm in bound formulas.
enum class LogBase { two, natural };

double log_in(double x, LogBase base);
// log(d) in the given base; the maximal entropy of a d-outcome distribution.
double log_dim(double d, LogBase base);
LogBase parse_log_base(const std::string& name);
std::string to_string(LogBase base);

// Tolerances shared by the validating constructors.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenClip = 1e-10;
inline constexpr double kProjectorTol = 1e-10;

class ProbabilityVector {
 public:
  // Entries in [-tol, 0) are clipped to 0; anything more negative, or a sum
  // off by more than `tol`, throws InvalidInput.
  static ProbabilityVector from(std::vector<double> entries, double tol = 1e-12);

  std::span<const double> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  explicit ProbabilityVector(std::vector<double> entries) : entries_(std::move(entries)) {}
  std::vector<double> entries_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity (max elementwise deviation 1e-12), unit trace
  // (1e-12) and eigenvalues >= -1e-10. The stored matrix is the exact
  // Hermitian part of the input.
  static DensityMatrix from(const CMatrix& m);
  static DensityMatrix maximally_mixed(int d);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  // Ascending, with values in [-1e-10, 0) clipped to 0.
  const RVector& eigenvalues() const { return eigenvalues_; }

 private:
  DensityMatrix(CMatrix rho, RVector ev) : rho_(std::move(rho)), eigenvalues_(std::move(ev)) {}
  CMatrix rho_;
  RVector eigenvalues_;
};

class ProjectiveMeasurement {
 public:
  // Checks P^2 = P, P = P^dagger, pairwise orthogonality and completeness,
  // all within 1e-10.
  static ProjectiveMeasurement from(std::vector<CMatrix> projectors,
                                    std::vector<std::string> labels = {});
  // Rank-1 measurement in the orthonormal basis given by the columns of `basis`.
  static ProjectiveMeasurement from_basis(const CMatrix& basis);
  static ProjectiveMeasurement computational(int d);

  int dim() const { return dim_; }
  std::size_t outcomes() const { return projectors_.size(); }
  const CMatrix& projector(std::size_t i) const { return projectors_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool rank_one() const;

 private:
  ProjectiveMeasurement(int dim, std::vector<CMatrix> p, std::vector<std::string> labels)
      : dim_(dim), projectors_(std::move(p)), labels_(std::move(labels)) {}
  int dim_;
  std::vector<CMatrix> projectors_;
  std::vector<std::string> labels_;
};

double shannon_entropy(const ProbabilityVector& p, LogBase base = LogBase::two);
double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::two);
ProbabilityVector measurement_distribution(const DensityMatrix& rho, const ProjectiveMeasurement& m);

// Independent, reproducible random streams. `derive_seed` mixes a stream index
// into a base seed (splitmix64) so sample i of a sweep does not depend on how
// many draws earlier samples consumed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
using Rng = std::mt19937_64;

// Haar unitary: QR of a complex Ginibre matrix with the phases of diag(R)
// moved into Q.
CMatrix haar_random_unitary(int d, Rng& rng);
CMatrix haar_random_unitary(int d, std::uint64_t seed);

// Hilbert-Schmidt ensemble: G G^dagger / Tr(G G^dagger), G square Ginibre.
DensityMatrix random_density_matrix(int d, Rng& rng);
DensityMatrix random_density_matrix(int d, std::uint64_t seed);

// f(H) for Hermitian H via its eigendecomposition.
template <class F>
CMatrix hermitian_function(const CMatrix& h, F&& f) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  RVector v = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

double max_hermitian_deviation(const CMatrix& m);

// Reduced states of a bipartite operator on C^dA (x) C^dB.
CMatrix partial_trace_b(const CMatrix& m, int da, int db);
CMatrix partial_trace_a(const CMatrix& m, int da, int db);

// Tr(rho L) - [S(rho) - log Tr(b^{-L})], b the log base. Non-negative for
// every state; zero exactly at the thermal state b^{-L}/Tr(b^{-L}).
double gibbs_gap(const DensityMatrix& rho, const CMatrix& L, LogBase base = LogBase::two);
DensityMatrix thermal_state(const CMatrix& L, LogBase base = LogBase::two);

}  // namespace eur
