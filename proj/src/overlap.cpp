#include "eur/overlap.hpp"

#include "eur/errors.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace eur {

OverlapMatrix OverlapMatrix::from_entries(RMatrix entries, Source source, std::string description) {
  if (entries.size() == 0) throw InvalidInput("overlap matrix is empty");
  for (Eigen::Index j = 0; j < entries.cols(); ++j)
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
      double& v = entries(i, j);
      if (!std::isfinite(v) || v < -1e-12) throw InvalidInput("overlap matrix entries must be non-negative");
      if (v < 0.0) v = 0.0;
    }
  Eigen::JacobiSVD<RMatrix> svd(entries);
  RVector sv = svd.singularValues();
  return OverlapMatrix(std::move(entries), std::move(sv), source, std::move(description));
}

bool OverlapMatrix::doubly_stochastic(double tol) const {
  if (!square()) return false;
  const RVector ones = RVector::Ones(c_.cols());
  return ((c_ * ones).array() - 1.0).abs().maxCoeff() <= tol &&
         ((c_.transpose() * ones).array() - 1.0).abs().maxCoeff() <= tol;
}

bool OverlapMatrix::constant(double tol) const {
  if (!square()) return false;
  const double v = 1.0 / static_cast<double>(c_.rows());
  return (c_.array() - v).abs().maxCoeff() <= tol;
}

bool OverlapMatrix::permutation(double tol) const {
  if (!square()) return false;
  for (Eigen::Index i = 0; i < c_.rows(); ++i)
    for (Eigen::Index j = 0; j < c_.cols(); ++j)
      if (std::min(std::abs(c_(i, j)), std::abs(c_(i, j) - 1.0)) > tol) return false;
  return doubly_stochastic(tol);
}

std::pair<double, double> OverlapMatrix::top_two_entries() const {
  if (c_.size() < 2) throw InvalidInput("need at least two entries");
  // Counted with multiplicity: a repeated maximum gives c2 = c1.
  double c1 = -INFINITY, c2 = -INFINITY;
  for (Eigen::Index k = 0; k < c_.size(); ++k) {
    const double v = c_.data()[k];
    if (v > c1) {
      c2 = c1;
      c1 = v;
    } else if (v > c2) {
      c2 = v;
    }
  }
  return {c1, c2};
}

OverlapMatrix OverlapMatrix::transposed() const {
  return OverlapMatrix(c_.transpose(), sv_, source_, description_ + "^T");
}

OverlapMatrix build_overlap(const ProjectiveMeasurement& x, const ProjectiveMeasurement& y) {
  if (x.dim() != y.dim()) throw InvalidInput("measurement dimensions differ");
  RMatrix c(x.outcomes(), y.outcomes());
  for (std::size_t i = 0; i < x.outcomes(); ++i)
    for (std::size_t j = 0; j < y.outcomes(); ++j) {
      const Complex t = x.projector(i).cwiseProduct(y.projector(j).transpose()).sum();
      if (std::abs(t.imag()) > 1e-12) throw InternalError("Tr(X_i Y_j) has an imaginary part");
      c(i, j) = t.real();
    }
  auto out = OverlapMatrix::from_entries(std::move(c), OverlapMatrix::Source::from_projectors, "projectors");
  if (x.rank_one() && y.rank_one() && !out.doubly_stochastic(1e-10))
    throw InternalError("rank-1 overlap matrix is not doubly stochastic");
  return out;
}

OverlapMatrix from_unitary(const CMatrix& u) {
  if (u.rows() == 0 || u.rows() != u.cols()) throw InvalidInput("unitary must be square");
  const auto d = u.rows();
  if ((u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() >= 1e-10)
    throw InvalidInput("matrix is not unitary");
  return OverlapMatrix::from_entries(u.cwiseAbs2(), OverlapMatrix::Source::from_unitary, "unitary");
}

OverlapMatrix rotation_overlap_2d(double theta) {
  if (!(theta >= -1e-15 && theta <= std::numbers::pi / 4 + 1e-15))
    throw InvalidInput("rotation angle must lie in [0, pi/4]");
  const double c = std::cos(theta), s = std::sin(theta);
  RMatrix m(2, 2);
  m << c * c, s * s, s * s, c * c;
  std::ostringstream desc;
  desc.precision(17);
  desc << "rotation(" << theta << ")";
  return OverlapMatrix::from_entries(std::move(m), OverlapMatrix::Source::rotation_2d, desc.str());
}

OverlapMatrix mub_overlap(int d) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  return OverlapMatrix::from_entries(RMatrix::Constant(d, d, 1.0 / d), OverlapMatrix::Source::mub,
                                     "mub(" + std::to_string(d) + ")");
}

OverlapMatrix identity_overlap(int d) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  return OverlapMatrix::from_entries(RMatrix::Identity(d, d), OverlapMatrix::Source::identity,
                                     "identity(" + std::to_string(d) + ")");
}

OverlapMatrix tensor_overlap(const OverlapMatrix& a, const OverlapMatrix& b) {
  const RMatrix& x = a.entries();
  const RMatrix& y = b.entries();
  RMatrix k(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return OverlapMatrix::from_entries(std::move(k), OverlapMatrix::Source::tensor,
                                     a.description() + "(x)" + b.description());
}

double second_singular_value(const OverlapMatrix& c) { return c.sigma2(); }

CMatrix rotation_basis_2d(double theta) {
  CMatrix r(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  r << c, -s, s, c;
  return r;
}

CMatrix fourier_matrix(int d) {
  CMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * j * k / d);
  return f;
}

std::string to_text(const OverlapMatrix& c) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (j) out << ' ';
      out << c(i, j);
    }
    out << '\n';
  }
  return out.str();
}

OverlapMatrix overlap_from_text(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InvalidInput("bad matrix entry '" + tok + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw InvalidInput("ragged matrix rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput("empty matrix text");
  RMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return OverlapMatrix::from_entries(std::move(m));
}

}  // namespace eur
