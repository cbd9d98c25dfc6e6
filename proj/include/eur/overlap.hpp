#pragma once

#include "eur/qmath.hpp"

#include <iosfwd>
#include <string>

namespace eur {

// The matrix C with C_ij = Tr(X_i Y_j) linking the outcome distributions of two
// projective measurements. Immutable; singular values are computed once at
// construction.
class OverlapMatrix {
 public:
  enum class Source { from_projectors, from_unitary, rotation_2d, mub, identity, tensor, from_entries };

  // Entries must be finite and >= -1e-12 (tiny negatives are clipped to 0).
  static OverlapMatrix from_entries(RMatrix entries, Source source = Source::from_entries,
                                    std::string description = "entries");

  Eigen::Index rows() const { return c_.rows(); }
  Eigen::Index cols() const { return c_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return c_(i, j); }
  const RMatrix& entries() const { return c_; }
  // Descending.
  const RVector& singular_values() const { return sv_; }
  double sigma1() const { return sv_(0); }
  // 0 for a 1x1 matrix.
  double sigma2() const { return sv_.size() > 1 ? sv_(1) : 0.0; }
  Source source() const { return source_; }
  const std::string& description() const { return description_; }

  bool square() const { return c_.rows() == c_.cols(); }
  // Square, with all row and column sums equal to 1 within `tol`.
  bool doubly_stochastic(double tol = 1e-10) const;
  // Every entry equal to 1/d within `tol`.
  bool constant(double tol = 1e-12) const;
  // 0/1 entries with a single 1 per row and column, within `tol`.
  bool permutation(double tol = 1e-12) const;
  double max_entry() const { return c_.maxCoeff(); }
  // The two largest entries of the matrix, counted with multiplicity (c1 >= c2).
  std::pair<double, double> top_two_entries() const;

  OverlapMatrix transposed() const;

 private:
  OverlapMatrix(RMatrix c, RVector sv, Source s, std::string desc)
      : c_(std::move(c)), sv_(std::move(sv)), source_(s), description_(std::move(desc)) {}
  RMatrix c_;
  RVector sv_;
  Source source_;
  std::string description_;
};

OverlapMatrix build_overlap(const ProjectiveMeasurement& x, const ProjectiveMeasurement& y);
// |U_ij|^2; requires max |U^dagger U - I| < 1e-10.
OverlapMatrix from_unitary(const CMatrix& u);
// [[cos^2, sin^2], [sin^2, cos^2]], theta in [0, pi/4].
OverlapMatrix rotation_overlap_2d(double theta);
OverlapMatrix mub_overlap(int d);
OverlapMatrix identity_overlap(int d);
// Kronecker product C_A (x) C_B.
OverlapMatrix tensor_overlap(const OverlapMatrix& a, const OverlapMatrix& b);
double second_singular_value(const OverlapMatrix& c);

// Real rotation whose columns form the basis at angle theta to the
// computational basis; rotation_overlap_2d(theta) is its overlap with it.
CMatrix rotation_basis_2d(double theta);
// d-dimensional discrete Fourier matrix, unbiased to the computational basis.
CMatrix fourier_matrix(int d);

// Plain-text form: one row per line, entries as decimal text separated by
// whitespace. Lines starting with '#' and blank lines are ignored on input.
std::string to_text(const OverlapMatrix& c);
OverlapMatrix overlap_from_text(const std::string& text);

}  // namespace eur
