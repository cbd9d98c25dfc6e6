#include "eur/qmath.hpp"

#include "eur/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eur {

double log_in(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

double log_dim(double d, LogBase base) { return log_in(d, base); }

LogBase parse_log_base(const std::string& name) {
  if (name == "2" || name == "two" || name == "bits") return LogBase::two;
  if (name == "e" || name == "natural" || name == "nats") return LogBase::natural;
  throw InvalidInput("unknown log base '" + name + "' (expected 'two' or 'natural')");
}

std::string to_string(LogBase base) { return base == LogBase::two ? "two" : "natural"; }

ProbabilityVector ProbabilityVector::from(std::vector<double> entries, double tol) {
  if (entries.empty()) throw InvalidInput("probability vector is empty");
  double sum = 0.0;
  for (double& p : entries) {
    if (!std::isfinite(p) || p < -tol) throw InvalidInput("invalid distribution: negative or non-finite entry");
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) throw InvalidInput("invalid distribution: entries do not sum to 1");
  return ProbabilityVector(std::move(entries));
}

double max_hermitian_deviation(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix partial_trace_b(const CMatrix& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db) throw InvalidInput("partial trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

CMatrix partial_trace_a(const CMatrix& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db) throw InvalidInput("partial trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

DensityMatrix DensityMatrix::from(const CMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw InvalidInput("density matrix must be square and non-empty");
  if (max_hermitian_deviation(m) > kHermitianTol) throw InvalidInput("not a state: matrix is not Hermitian");
  CMatrix h = 0.5 * (m + m.adjoint());
  if (std::abs(h.trace().real() - 1.0) > kTraceTol) throw InvalidInput("not a state: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  RVector ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kEigenClip) throw InvalidInput("not a state: negative eigenvalue");
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return DensityMatrix(std::move(h), std::move(ev));
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  return from(CMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw InvalidInput("zero state vector");
  Eigen::VectorXcd v = psi / n;
  return from(v * v.adjoint());
}

ProjectiveMeasurement ProjectiveMeasurement::from(std::vector<CMatrix> projectors,
                                                  std::vector<std::string> labels) {
  if (projectors.empty()) throw InvalidInput("measurement has no projectors");
  const auto d = projectors.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const CMatrix& p = projectors[i];
    if (p.rows() != d || p.cols() != d) throw InvalidInput("projector dimensions differ");
    if ((p * p - p).cwiseAbs().maxCoeff() > kProjectorTol || max_hermitian_deviation(p) > kProjectorTol)
      throw InvalidInput("element " + std::to_string(i) + " is not an orthogonal projector");
    for (std::size_t j = 0; j < i; ++j)
      if ((p * projectors[j]).cwiseAbs().maxCoeff() > kProjectorTol)
        throw InvalidInput("projectors are not pairwise orthogonal");
    sum += p;
  }
  if ((sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kProjectorTol)
    throw InvalidInput("projectors do not sum to the identity");
  if (labels.empty())
    for (std::size_t i = 0; i < projectors.size(); ++i) labels.push_back(std::to_string(i));
  if (labels.size() != projectors.size()) throw InvalidInput("label count differs from projector count");
  return ProjectiveMeasurement(static_cast<int>(d), std::move(projectors), std::move(labels));
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const CMatrix& basis) {
  if (basis.rows() == 0 || basis.rows() != basis.cols()) throw InvalidInput("basis matrix must be square");
  std::vector<CMatrix> p;
  p.reserve(basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j) p.emplace_back(basis.col(j) * basis.col(j).adjoint());
  return from(std::move(p));
}

ProjectiveMeasurement ProjectiveMeasurement::computational(int d) {
  return from_basis(CMatrix::Identity(d, d));
}

bool ProjectiveMeasurement::rank_one() const {
  return std::all_of(projectors_.begin(), projectors_.end(),
                     [](const CMatrix& p) { return std::abs(p.trace().real() - 1.0) < kProjectorTol; });
}

double shannon_entropy(const ProbabilityVector& p, LogBase base) {
  double h = 0.0;
  for (double x : p.entries())
    if (x > 0.0) h -= x * log_in(x, base);
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
    const double e = rho.eigenvalues()(i);
    if (e > 0.0) s -= e * log_in(e, base);
  }
  return std::max(s, 0.0);
}

ProbabilityVector measurement_distribution(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  if (rho.dim() != m.dim()) throw InvalidInput("state and measurement dimensions differ");
  std::vector<double> p(m.outcomes());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = (rho.matrix().cwiseProduct(m.projector(i).transpose())).sum().real();
  return ProbabilityVector::from(std::move(p), 1e-10);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

CMatrix ginibre(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

CMatrix haar_random_unitary(int d, Rng& rng) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  Eigen::HouseholderQR<CMatrix> qr(ginibre(d, rng));
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double a = std::abs(r(j, j));
    const Complex phase = a > 0.0 ? r(j, j) / a : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CMatrix haar_random_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(d, rng);
}

DensityMatrix random_density_matrix(int d, Rng& rng) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  const CMatrix g = ginibre(d, rng);
  CMatrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint());
  return DensityMatrix::from(w / w.trace().real());
}

DensityMatrix random_density_matrix(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(d, rng);
}

namespace {

double log_base_e(LogBase base) { return base == LogBase::two ? std::numbers::ln2 : 1.0; }

void require_hermitian(const CMatrix& L) {
  if (L.rows() != L.cols()) throw InvalidInput("operator must be square");
  if (max_hermitian_deviation(L) > kProjectorTol) throw InvalidInput("operator is not Hermitian");
}

}  // namespace

double gibbs_gap(const DensityMatrix& rho, const CMatrix& L, LogBase base) {
  require_hermitian(L);
  if (L.rows() != rho.dim()) throw InvalidInput("state and operator dimensions differ");
  const CMatrix h = 0.5 * (L + L.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  // log_b sum_k b^{-l_k}, shifted for stability.
  const RVector& l = es.eigenvalues();
  const double lmin = l.minCoeff();
  const double c = log_base_e(base);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < l.size(); ++k) acc += std::exp(-(l(k) - lmin) * c);
  const double log_partition = -lmin + std::log(acc) / c;
  const double energy = (rho.matrix() * h).trace().real();
  return energy - (von_neumann_entropy(rho, base) - log_partition);
}

DensityMatrix thermal_state(const CMatrix& L, LogBase base) {
  require_hermitian(L);
  const CMatrix h = 0.5 * (L + L.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  const double c = log_base_e(base);
  CMatrix g = hermitian_function(h, [&](double x) { return std::exp(-(x - lmin) * c); });
  g = 0.5 * (g + g.adjoint());
  return DensityMatrix::from(g / g.trace().real());
}

}  // namespace eur
