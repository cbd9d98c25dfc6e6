#pragma once

#include "eur/norms.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace eur {

// A value whose derivation relies on the extended-MUB conjecture. When the
// caller asked for it, `verified` records whether a pointwise numeric norm
// evaluation confirmed the closed form (within 1e-7).
struct ConjecturalValue {
  double value = 0.0;
  bool conjecture = true;
  std::optional<bool> verified;
};

struct BoundReport {
  double h_x = 0.0;
  double h_y = 0.0;
  double entropy = 0.0;  // S(rho)
  double lhs = 0.0;      // lambda H(X) + mu H(Y)
  double rhs = 0.0;      // alpha S(rho) + c
  double gap = 0.0;      // lhs - rhs
  double c_value = 0.0;
  NormMethod norm_method = NormMethod::numeric_multistart;
  WeightTriple weights;
};

// -alpha log ||C||_{alpha/mu -> alpha/(alpha-lambda)}; 0 when alpha = 0.
double c_lower_bound(const OverlapMatrix& c, const WeightTriple& w, const SolverOptions& opts = {});
// Same, from an already computed norm at the matching exponents.
double c_from_norm(const NormResult& n, const WeightTriple& w);

BoundReport evaluate_eur(const DensityMatrix& rho, const ProjectiveMeasurement& x, const ProjectiveMeasurement& y,
                         const WeightTriple& w, const SolverOptions& opts = {});
// For sweeps over many states with fixed measurements: `n` must be the norm of
// build_overlap(x, y) at the exponents of `w`, in base `base`.
BoundReport evaluate_eur(const DensityMatrix& rho, const ProjectiveMeasurement& x, const ProjectiveMeasurement& y,
                         const WeightTriple& w, const NormResult& n, LogBase base);

// (1 + sigma2) S + (1 - sigma2) log d: the equal-weight relation at mu = lambda = mu*.
ConjecturalValue qudit_eur_rhs(double sigma2, int d, double entropy, LogBase base = LogBase::two);
// S - log c1.
double bccrr_rhs(const OverlapMatrix& c, double entropy, LogBase base = LogBase::two);
// S - log[c1 K^2 + c2 (1 - K^2)], K = (1 + sqrt(c1))/2.
double rpz2_rhs(const OverlapMatrix& c, double entropy, LogBase base = LogBase::two);

struct ComparisonRow {
  double c1 = 0.0;
  double c2 = 0.0;
  double c_rpz = 0.0;
  double sigma2 = 0.0;
  double ours = 0.0;   // (1 - sigma2) log d
  double bccrr = 0.0;  // -log c1
  double rpz2 = 0.0;   // -log[c1 K^2 + c2 (1 - K^2)]
  bool ours_dominates = false;  // ours >= max(bccrr, rpz2) - 1e-12
  std::optional<bool> verified;  // numeric norm at (mu*, mu*) matches the MUB value
  double numeric_excess = 0.0;   // log ||C|| - (1 - 2 mu*) log d when verified
};

// State-independent constants of the three equal-weight relations. With
// `verify`, the conjectured value is checked against norm_numeric at mu*.
ComparisonRow compare_state_independent(const OverlapMatrix& c, LogBase base = LogBase::two,
                                        const std::optional<SolverOptions>& verify = std::nullopt);

// alpha = 1 lattice of (lambda, mu) with spacing 1/(n-1), restricted to the
// region (1-mu)(1-lambda) >= mu lambda sigma2^2.
WeightGrid default_weight_grid(double sigma2, int n = 21);

// min over the grid (plus the point lambda = mu = 1) of
// lambda H_X + mu H_Y - c(1, lambda, mu). Grid entries must have alpha = 1.
double entropy_upper_bound(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                           const SolverOptions& opts = {});

struct EnvelopePoint {
  double entropy;
  double min_sum;  // lower envelope of H(X) + H(Y)
};
// For each S, max over grid points with lambda = mu > 0 of (alpha S + c)/lambda.
std::vector<EnvelopePoint> envelope_curve(const OverlapMatrix& c, const std::vector<double>& entropies,
                                          const WeightGrid& grid, const SolverOptions& opts = {});

}  // namespace eur
