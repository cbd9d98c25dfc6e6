#include "eur/bounds.hpp"

#include "eur/errors.hpp"

#include <algorithm>
#include <cmath>

namespace eur {

namespace {

constexpr double kVerifyTol = 1e-7;

void require_unit_alpha(const WeightTriple& w) {
  if (std::abs(w.alpha - 1.0) > 1e-12) throw InvalidInput("weight grid entries must have alpha = 1");
}

}  // namespace

double c_from_norm(const NormResult& n, const WeightTriple& w) {
  if (w.alpha <= 0.0) return 0.0;
  return -w.alpha * n.log_value;
}

double c_lower_bound(const OverlapMatrix& c, const WeightTriple& w, const SolverOptions& opts) {
  if (w.alpha <= 0.0) return 0.0;
  return c_from_norm(norm(c, w, opts), w);
}

BoundReport evaluate_eur(const DensityMatrix& rho, const ProjectiveMeasurement& x, const ProjectiveMeasurement& y,
                         const WeightTriple& w, const NormResult& n, LogBase base) {
  BoundReport rep;
  rep.weights = w;
  rep.h_x = shannon_entropy(measurement_distribution(rho, x), base);
  rep.h_y = shannon_entropy(measurement_distribution(rho, y), base);
  rep.entropy = von_neumann_entropy(rho, base);
  rep.c_value = c_from_norm(n, w);
  rep.norm_method = n.method;
  rep.lhs = w.lambda * rep.h_x + w.mu * rep.h_y;
  rep.rhs = w.alpha * rep.entropy + rep.c_value;
  rep.gap = rep.lhs - rep.rhs;
  return rep;
}

BoundReport evaluate_eur(const DensityMatrix& rho, const ProjectiveMeasurement& x, const ProjectiveMeasurement& y,
                         const WeightTriple& w, const SolverOptions& opts) {
  if (rho.dim() != x.dim() || x.dim() != y.dim()) throw InvalidInput("state and measurement dimensions differ");
  if (w.alpha <= 0.0) {
    NormResult trivial;
    trivial.value = 1.0;
    trivial.log_value = 0.0;
    return evaluate_eur(rho, x, y, w, trivial, opts.base);
  }
  return evaluate_eur(rho, x, y, w, norm(build_overlap(x, y), w, opts), opts.base);
}

ConjecturalValue qudit_eur_rhs(double sigma2, int d, double entropy, LogBase base) {
  if (!(sigma2 >= -1e-12 && sigma2 <= 1.0 + 1e-10)) throw InvalidInput("sigma2 must lie in [0, 1]");
  return {(1.0 + sigma2) * entropy + (1.0 - sigma2) * log_dim(d, base), true, std::nullopt};
}

double bccrr_rhs(const OverlapMatrix& c, double entropy, LogBase base) {
  return entropy - log_in(c.max_entry(), base);
}

namespace {

double rpz2_bracket(double c1, double c2) {
  const double k = (1.0 + std::sqrt(c1)) / 2.0;
  return c1 * k * k + c2 * (1.0 - k * k);
}

}  // namespace

double rpz2_rhs(const OverlapMatrix& c, double entropy, LogBase base) {
  const auto [c1, c2] = c.top_two_entries();
  return entropy - log_in(rpz2_bracket(c1, c2), base);
}

ComparisonRow compare_state_independent(const OverlapMatrix& c, LogBase base,
                                        const std::optional<SolverOptions>& verify) {
  if (!c.doubly_stochastic(1e-8)) throw InvalidInput("comparison needs a square doubly stochastic matrix");
  const int d = static_cast<int>(c.rows());
  ComparisonRow row;
  std::tie(row.c1, row.c2) = c.top_two_entries();
  row.c_rpz = (1.0 + std::sqrt(row.c1)) / 2.0;
  row.sigma2 = std::min(c.sigma2(), 1.0);
  row.ours = (1.0 - row.sigma2) * log_dim(d, base);
  row.bccrr = -log_in(row.c1, base);
  row.rpz2 = -log_in(rpz2_bracket(row.c1, row.c2), base);
  row.ours_dominates = row.ours >= std::max(row.bccrr, row.rpz2) - 1e-12;
  if (verify) {
    const double m = mu_star(row.sigma2);
    SolverOptions o = *verify;
    o.base = base;
    const NormResult n = norm_numeric(c, 1.0 / m, 1.0 / (1.0 - m), o);
    row.numeric_excess = n.log_value - (1.0 - 2.0 * m) * log_dim(d, base);
    row.verified = row.numeric_excess <= kVerifyTol;
  }
  return row;
}

WeightGrid default_weight_grid(double sigma2, int n) {
  if (n < 2) throw InvalidInput("grid needs at least 2 points per axis");
  WeightGrid grid;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double lambda = static_cast<double>(i) / (n - 1);
      const double mu = static_cast<double>(j) / (n - 1);
      if (conjecture_region_contains(mu, lambda, sigma2)) grid.push_back(WeightTriple::unit(lambda, mu));
    }
  return grid;
}

double entropy_upper_bound(double h_x, double h_y, const OverlapMatrix& c, const WeightGrid& grid,
                           const SolverOptions& opts) {
  if (grid.empty()) throw InvalidInput("weight grid is empty");
  const WeightTriple kmu = WeightTriple::unit(1.0, 1.0);
  double best = h_x + h_y - c_lower_bound(c, kmu, opts);
  for (const WeightTriple& w : grid) {
    require_unit_alpha(w);
    best = std::min(best, w.lambda * h_x + w.mu * h_y - c_lower_bound(c, w, opts));
  }
  return best;
}

std::vector<EnvelopePoint> envelope_curve(const OverlapMatrix& c, const std::vector<double>& entropies,
                                          const WeightGrid& grid, const SolverOptions& opts) {
  struct Line {
    double alpha, lambda, c;
  };
  std::vector<Line> lines;
  for (const WeightTriple& w : grid) {
    if (std::abs(w.lambda - w.mu) > 1e-12) throw InvalidInput("envelope grid must have lambda = mu");
    if (w.lambda <= 0.0) continue;
    lines.push_back({w.alpha, w.lambda, c_lower_bound(c, w, opts)});
  }
  if (lines.empty()) throw InvalidInput("envelope grid has no point with lambda = mu > 0");
  std::vector<EnvelopePoint> out;
  out.reserve(entropies.size());
  for (double s : entropies) {
    double best = -kInf;
    for (const Line& l : lines) best = std::max(best, (l.alpha * s + l.c) / l.lambda);
    out.push_back({s, best});
  }
  return out;
}

}  // namespace eur
