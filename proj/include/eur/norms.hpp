#pragma once

#include "eur/overlap.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eur {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Weights (alpha, lambda, mu) of
//   lambda H(X) + mu H(Y) >= alpha S(rho) + c(alpha, lambda, mu)
// with 0 <= lambda, mu <= alpha <= 1. The constant is controlled by the
// r -> s norm of the overlap matrix, r = alpha/mu and s = alpha/(alpha - lambda).
struct WeightTriple {
  double alpha = 1.0;
  double lambda = 1.0;
  double mu = 1.0;

  // Throws InvalidInput unless 0 <= lambda, mu <= alpha <= 1 (1e-12 slack).
  static WeightTriple make(double alpha, double lambda, double mu);
  // alpha = 1.
  static WeightTriple unit(double lambda, double mu) { return make(1.0, lambda, mu); }

  // Both require alpha > 0. r = +inf when mu = 0, s = +inf when lambda = alpha.
  double r() const;
  double s() const;
};

using WeightGrid = std::vector<WeightTriple>;

enum class NormMethod { closed_mub, closed_identity, closed_s_le_r, closed_kmu, numeric_multistart };
std::string to_string(NormMethod m);

struct NormResult {
  double value = 0.0;
  double log_value = 0.0;     // in the configured base
  std::vector<double> witness;  // non-negative, unit r-norm
  NormMethod method = NormMethod::numeric_multistart;
  // Sandwich bounds ||C_MUB|| <= ||C|| <= ||1||; for matrices that are not
  // doubly stochastic, lower is the all-ones objective and upper is +inf.
  double lower = 0.0;
  double upper = kInf;
  int starts = 0;
  int converged_starts = 0;
};

struct SolverOptions {
  int restarts = 64;
  int max_iterations = 10000;
  double tolerance = 1e-11;  // on the relative change of the objective
  std::uint64_t seed = 0;
  LogBase base = LogBase::two;
};

// Vector p-norm, p in [1, inf].
double pnorm(std::span<const double> v, double p);
// ||C x||_s / ||x||_r for non-negative x.
double norm_objective(const RMatrix& c, std::span<const double> x, double r, double s);

// Constant-1/d matrix: d^(1/s - 1/r).
double norm_mub(int d, double r, double s);
// Identity: d^(1/s - 1/r) when r >= s, otherwise 1.
double norm_identity(int d, double r, double s);

// The proven regimes for a doubly stochastic C (within 1e-8): r = 1, s = inf
// (max entry); s <= r; constant matrix; permutation matrix. Returns nothing
// outside them, or when C is not doubly stochastic.
std::optional<NormResult> norm_closed_form(const OverlapMatrix& c, double r, double s,
                                           LogBase base = LogBase::two);

// Multistart nonlinear power iteration over the non-negative orthant. Throws
// SolverFailure when no start converges and InternalError when the result
// contradicts the sandwich bounds or an applicable closed form by > 1e-7.
NormResult norm_numeric(const OverlapMatrix& c, double r, double s, const SolverOptions& opts = {});

// Closed form where one is proven, numeric otherwise.
NormResult norm(const OverlapMatrix& c, const WeightTriple& w, const SolverOptions& opts = {});

// Critical mu = lambda up to which the MUB value is conjectured to hold.
double mu_star(double sigma2);

// (1 - mu)(1 - lambda) >= mu lambda sigma2^2 - tol; true when mu or lambda is 0.
bool conjecture_region_contains(double mu, double lambda, double sigma2, double tol = 0.0);

// Ascending eigenvalues of (1-mu)(1-lambda) I - mu lambda C^T C on the
// orthogonal complement of the all-ones vector.
std::vector<double> hessian_spectrum_at_ones(const OverlapMatrix& c, double mu, double lambda);

// d = 2 ratio objective f(z) for C = rotation_overlap_2d(theta),
//   ||C||_{1/mu -> 1/(1-lambda)} = cos^2(theta) sup_{z >= 0} f(z).
double ratio_objective_2d(double theta, double mu, double lambda, double z);

struct ScanPoint {
  double z;
  double ratio;  // f(z) / f(1)
};
// f(z)/f(1) on a uniform grid of `grid` points over [0, 1].
std::vector<ScanPoint> scan_2d_objective(double theta, double mu, double lambda, int grid);

}  // namespace eur
