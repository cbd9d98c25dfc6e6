#pragma once

#include "eur/bounds.hpp"

#include <utility>
#include <vector>

namespace eur {

// Delta_X = log d - H(X), Delta_Y = log d - H(Y), gamma = sqrt(Delta_X / Delta_Y).
// gamma is +inf when only Delta_Y vanishes and 1 when both do.
struct EntropyDeficits {
  double dx = 0.0;
  double dy = 0.0;
  double gamma = 1.0;

  static EntropyDeficits from_entropies(double h_x, double h_y, double log_d);
  static EntropyDeficits from_deficits(double dx, double dy);
};

// --- extractable randomness -------------------------------------------------

// max over the grid (alpha = 1) of (1-lambda) H_X - mu H_Y - log ||C||_{1/mu -> 1/(1-lambda)}.
// With `refine`, the best grid point is then polished by coordinate-wise
// golden-section search over the region (1-mu)(1-lambda) >= mu lambda sigma2(C)^2.
double randomness_bound_numeric(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                                const SolverOptions& opts = {}, bool refine = false);

// Closed-form optimum under the conjecture; requires gamma <= 1 (swap X and Y
// otherwise). sigma2 = 1 with gamma = 1 evaluates to its limit 0.
ConjecturalValue randomness_bound_analytic(const EntropyDeficits& deficits, double sigma2);

// --- entanglement detection ------------------------------------------------

// lambda H(X_AB) + mu H(Y_AB) < S_max - log ||C_A|| - log ||C_B||, both norms at
// 1/mu -> 1/(1-lambda). True certifies entanglement; false is inconclusive.
bool entanglement_witness_general(double h_xab, double h_yab, const OverlapMatrix& c_a, const OverlapMatrix& c_b,
                                  double s_max, double mu, double lambda, const SolverOptions& opts = {});

// Weights maximizing lambda Delta_X + mu Delta_Y on the conjectured region.
// Returns (mu, lambda). Throws InvalidInput for sigma2 = 1.
std::pair<double, double> optimal_weights(double gamma, double sigma2);

struct WitnessResult {
  bool entangled = false;
  double mu = 0.0;
  double lambda = 0.0;
  double lhs = 0.0;  // lambda Delta_X + mu Delta_Y
  double rhs = 0.0;  // log d - S_max
  bool conjecture = true;
};

// d is the total dimension d_A d_B; sigma2 = max(sigma2_A, sigma2_B).
WitnessResult entanglement_witness_analytic(double h_xab, double h_yab, int d, double sigma2, double s_max,
                                            LogBase base = LogBase::two);

// Werner state on C^d (x) C^d with Tr(W V) = phi, V the swap.
DensityMatrix werner_state(int d, double phi);
CMatrix swap_operator(int d);

struct WernerPoint {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double phi = 0.0;
  bool detected = false;
};

// Two-qubit Werner scan: X locals computational, Y locals rotated by
// (theta_a, theta_b); analytic witness with sigma2 = max(cos 2 theta_a, cos 2 theta_b).
std::vector<WernerPoint> werner_detection_scan(double phi, const std::vector<std::pair<double, double>>& thetas,
                                               LogBase base = LogBase::two);

// --- entanglement with an eavesdropper ---------------------------------------

// Conjectured upper bound on S(E) from the joint entropies; sigma2 belongs to
// C_AB. Outside sigma2 <= gamma <= 1/sigma2 the clamped optimal weights are used.
ConjecturalValue eavesdropper_entropy_bound(double h_x, double h_y, int d_a, int d_b, double sigma2,
                                            LogBase base = LogBase::two);

// min over the grid (alpha = 1) of lambda H_X + mu H_Y + log ||C||, optionally
// refined over the conjectured region like randomness_bound_numeric.
double eavesdropper_entropy_bound_numeric(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                                          const SolverOptions& opts = {}, bool refine = false);

}  // namespace eur
