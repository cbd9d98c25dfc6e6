#include "eur/applications.hpp"

#include "eur/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace eur {

EntropyDeficits EntropyDeficits::from_deficits(double dx, double dy) {
  if (!(dx >= -1e-10) || !(dy >= -1e-10)) throw InvalidInput("entropy deficits must be non-negative");
  EntropyDeficits out;
  out.dx = std::max(dx, 0.0);
  out.dy = std::max(dy, 0.0);
  if (out.dy > 0.0)
    out.gamma = std::sqrt(out.dx / out.dy);
  else
    out.gamma = out.dx > 0.0 ? kInf : 1.0;
  return out;
}

EntropyDeficits EntropyDeficits::from_entropies(double h_x, double h_y, double log_d) {
  return from_deficits(log_d - h_x, log_d - h_y);
}

namespace {

// Strictness margin of the witnesses: separable states that saturate the
// inequality must not be flagged because of rounding.
constexpr double kWitnessMargin = 1e-10;

void require_sigma2(double sigma2) {
  if (!(sigma2 >= -1e-12 && sigma2 <= 1.0 + 1e-10)) throw InvalidInput("sigma2 must lie in [0, 1]");
}

// Largest lambda with (1-mu)(1-lambda) >= mu lambda sigma2^2.
double lambda_boundary(double mu, double sigma2) {
  if (mu <= 0.0 || sigma2 <= 0.0) return 1.0;
  const double denom = 1.0 - mu + mu * sigma2 * sigma2;
  return denom <= 0.0 ? 0.0 : (1.0 - mu) / denom;
}

// argmax of f on [a, b], assuming unimodality; endpoints are always tried.
std::pair<double, double> golden_max(const std::function<double(double)>& f, double a, double b) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 48; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  std::pair<double, double> best = f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
  for (double e : {a, b}) {
    const double fe = f(e);
    if (fe > best.second) best = {e, fe};
  }
  return best;
}

// Maximizes objective(lambda, mu) over the grid, then optionally polishes the
// best point inside the conjectured region in coordinates (mu, t), with
// lambda = t * lambda_boundary(mu).
double maximize_weights(const std::function<double(double, double)>& objective, const WeightGrid& grid,
                        double sigma2, bool refine) {
  if (grid.empty()) throw InvalidInput("weight grid is empty");
  double best = -kInf, best_lambda = 0.0, best_mu = 0.0;
  for (const WeightTriple& w : grid) {
    if (std::abs(w.alpha - 1.0) > 1e-12) throw InvalidInput("weight grid entries must have alpha = 1");
    const double v = objective(w.lambda, w.mu);
    if (v > best) {
      best = v;
      best_lambda = w.lambda;
      best_mu = w.mu;
    }
  }
  if (!refine || !conjecture_region_contains(best_mu, best_lambda, sigma2, 1e-12)) return best;

  double mu = best_mu;
  const double lb = lambda_boundary(mu, sigma2);
  double t = lb > 0.0 ? std::clamp(best_lambda / lb, 0.0, 1.0) : 0.0;
  auto at = [&](double m, double tt) { return objective(tt * lambda_boundary(m, sigma2), m); };
  // The boundary curve first: with the conjectured norm the objective is linear
  // in (lambda, mu), so its maximum sits there. Also frees the search from the
  // mu = 1 corner, where t is degenerate.
  {
    auto [mb, fb] = golden_max([&](double x) { return at(x, 1.0); }, 0.0, 1.0);
    if (fb > best) {
      best = fb;
      mu = mb;
      t = 1.0;
    }
  }
  for (int sweep = 0; sweep < 4; ++sweep) {
    const double before = best;
    auto [tn, ft] = golden_max([&](double x) { return at(mu, x); }, 0.0, 1.0);
    if (ft > best) {
      best = ft;
      t = tn;
    }
    auto [mn, fm] = golden_max([&](double x) { return at(x, t); }, 0.0, 1.0);
    if (fm > best) {
      best = fm;
      mu = mn;
    }
    if (best - before < 1e-13) break;
  }
  return best;
}

double log_norm(const OverlapMatrix& c, double lambda, double mu, const SolverOptions& opts) {
  return norm(c, WeightTriple::unit(lambda, mu), opts).log_value;
}

}  // namespace

double randomness_bound_numeric(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                                const SolverOptions& opts, bool refine) {
  auto objective = [&](double lambda, double mu) {
    return (1.0 - lambda) * h_x - mu * h_y - log_norm(c, lambda, mu, opts);
  };
  return maximize_weights(objective, grid, std::min(c.sigma2(), 1.0), refine);
}

ConjecturalValue randomness_bound_analytic(const EntropyDeficits& deficits, double sigma2) {
  require_sigma2(sigma2);
  if (deficits.gamma > 1.0 + 1e-12) throw InvalidInput("gamma > 1: swap the roles of X and Y");
  const double s = std::clamp(sigma2, 0.0, 1.0);
  ConjecturalValue out;
  if (s == 0.0) {
    out.value = deficits.dy;
  } else if (deficits.gamma >= s) {
    if (s >= 1.0) {
      out.value = 0.0;
    } else {
      const double v = std::sqrt(deficits.dy) - s * std::sqrt(deficits.dx);
      out.value = v * v / (1.0 - s * s);
    }
  } else {
    out.value = deficits.dy - deficits.dx;
  }
  return out;
}

bool entanglement_witness_general(double h_xab, double h_yab, const OverlapMatrix& c_a, const OverlapMatrix& c_b,
                                  double s_max, double mu, double lambda, const SolverOptions& opts) {
  const WeightTriple w = WeightTriple::unit(lambda, mu);
  const double rhs = s_max - norm(c_a, w, opts).log_value - norm(c_b, w, opts).log_value;
  return lambda * h_xab + mu * h_yab < rhs - kWitnessMargin;
}

std::pair<double, double> optimal_weights(double gamma, double sigma2) {
  require_sigma2(sigma2);
  if (!(gamma >= 0.0)) throw InvalidInput("gamma must be non-negative");
  if (sigma2 >= 1.0) throw InvalidInput("sigma2 = 1: the conjectured region is degenerate");
  const double s = std::max(sigma2, 0.0);
  if (s == 0.0) return {1.0, 1.0};
  if (gamma < s) return {1.0, 0.0};
  if (gamma > 1.0 / s) return {0.0, 1.0};
  const double denom = 1.0 - s * s;
  const double mu = (1.0 - s * gamma) / denom;
  const double lambda = (1.0 - s / gamma) / denom;
  return {std::clamp(mu, 0.0, 1.0), std::clamp(lambda, 0.0, 1.0)};
}

WitnessResult entanglement_witness_analytic(double h_xab, double h_yab, int d, double sigma2, double s_max,
                                            LogBase base) {
  const double log_d = log_dim(d, base);
  const EntropyDeficits def = EntropyDeficits::from_entropies(h_xab, h_yab, log_d);
  WitnessResult out;
  out.rhs = log_d - s_max;
  if (sigma2 >= 1.0) return out;
  std::tie(out.mu, out.lambda) = optimal_weights(def.gamma, sigma2);
  out.lhs = out.lambda * def.dx + out.mu * def.dy;
  out.entangled = out.lhs > out.rhs + kWitnessMargin;
  return out;
}

CMatrix swap_operator(int d) {
  CMatrix v = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
  return v;
}

DensityMatrix werner_state(int d, double phi) {
  if (d < 2) throw InvalidInput("Werner states need local dimension >= 2");
  if (!(phi >= -1.0 && phi <= 1.0)) throw InvalidInput("Werner parameter must lie in [-1, 1]");
  const double dd = d;
  const int n = d * d;
  const CMatrix w = ((dd - phi) * CMatrix::Identity(n, n) + (dd * phi - 1.0) * swap_operator(d)) /
                    (dd * (dd * dd - 1.0));
  return DensityMatrix::from(w);
}

std::vector<WernerPoint> werner_detection_scan(double phi, const std::vector<std::pair<double, double>>& thetas,
                                               LogBase base) {
  const DensityMatrix w = werner_state(2, phi);
  const double s_max = std::max(von_neumann_entropy(DensityMatrix::from(partial_trace_b(w.matrix(), 2, 2)), base),
                                von_neumann_entropy(DensityMatrix::from(partial_trace_a(w.matrix(), 2, 2)), base));
  const auto x = ProjectiveMeasurement::computational(4);
  const double h_x = shannon_entropy(measurement_distribution(w, x), base);
  std::vector<WernerPoint> out;
  out.reserve(thetas.size());
  for (const auto& [ta, tb] : thetas) {
    if (!(ta >= 0.0 && ta <= std::numbers::pi / 4 + 1e-12 && tb >= 0.0 && tb <= std::numbers::pi / 4 + 1e-12))
      throw InvalidInput("rotation angles must lie in [0, pi/4]");
    CMatrix basis(4, 4);
    const CMatrix ra = rotation_basis_2d(ta), rb = rotation_basis_2d(tb);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) basis.block(i * 2, j * 2, 2, 2) = ra(i, j) * rb;
    const double h_y = shannon_entropy(measurement_distribution(w, ProjectiveMeasurement::from_basis(basis)), base);
    const double sigma2 = std::max(std::cos(2.0 * ta), std::cos(2.0 * tb));
    const WitnessResult r = entanglement_witness_analytic(h_x, h_y, 4, sigma2, s_max, base);
    out.push_back({ta, tb, phi, r.entangled});
  }
  return out;
}

ConjecturalValue eavesdropper_entropy_bound(double h_x, double h_y, int d_a, int d_b, double sigma2, LogBase base) {
  require_sigma2(sigma2);
  if (sigma2 >= 1.0) throw InvalidInput("sigma2 = 1: the conjectured region is degenerate");
  const double log_d = log_dim(static_cast<double>(d_a) * d_b, base);
  const EntropyDeficits def = EntropyDeficits::from_entropies(h_x, h_y, log_d);
  const double s = std::max(sigma2, 0.0);
  ConjecturalValue out;
  const bool interior = s == 0.0 || (def.gamma >= s && def.gamma <= 1.0 / s);
  if (interior) {
    out.value = (h_x + h_y + 2.0 * std::sqrt(def.dx * def.dy) * s - (1.0 + s * s) * log_d) / (1.0 - s * s);
  } else {
    const auto [mu, lambda] = optimal_weights(def.gamma, s);
    out.value = log_d - lambda * def.dx - mu * def.dy;
  }
  return out;
}

double eavesdropper_entropy_bound_numeric(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                                          const SolverOptions& opts, bool refine) {
  auto objective = [&](double lambda, double mu) {
    return -(lambda * h_x + mu * h_y + log_norm(c, lambda, mu, opts));
  };
  return -maximize_weights(objective, grid, std::min(c.sigma2(), 1.0), refine);
}

}  // namespace eur
