#include "eur/norms.hpp"

#include "eur/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eur {

namespace {

constexpr double kWeightSlack = 1e-12;
constexpr double kClosedFormAgreement = 1e-7;
constexpr double kSandwichSlack = 1e-9;

double inverse(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void require_exponents(double r, double s) {
  if (!(r >= 1.0) || !(s >= 1.0)) throw InvalidInput("norm exponents must satisfy r >= 1 and s >= 1");
}

}  // namespace

WeightTriple WeightTriple::make(double alpha, double lambda, double mu) {
  if (!(alpha <= 1.0 + kWeightSlack) || !(lambda >= -kWeightSlack) || !(mu >= -kWeightSlack) ||
      !(lambda <= alpha + kWeightSlack) || !(mu <= alpha + kWeightSlack))
    throw InvalidInput("weights must satisfy 0 <= lambda, mu <= alpha <= 1");
  WeightTriple w;
  w.alpha = std::clamp(alpha, 0.0, 1.0);
  w.lambda = std::clamp(lambda, 0.0, w.alpha);
  w.mu = std::clamp(mu, 0.0, w.alpha);
  return w;
}

double WeightTriple::r() const {
  if (alpha <= 0.0) throw InvalidInput("alpha = 0 has no associated norm");
  return mu <= 0.0 ? kInf : alpha / mu;
}

double WeightTriple::s() const {
  if (alpha <= 0.0) throw InvalidInput("alpha = 0 has no associated norm");
  return lambda >= alpha ? kInf : alpha / (alpha - lambda);
}

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::closed_mub: return "closed_mub";
    case NormMethod::closed_identity: return "closed_identity";
    case NormMethod::closed_s_le_r: return "closed_s_le_r";
    case NormMethod::closed_kmu: return "closed_kmu";
    case NormMethod::numeric_multistart: return "numeric_multistart";
  }
  return "unknown";
}

double pnorm(std::span<const double> v, double p) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0 || std::isinf(p)) return m;
  if (p == 1.0) {
    double acc = 0.0;
    for (double x : v) acc += std::abs(x);
    return acc;
  }
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

double norm_objective(const RMatrix& c, std::span<const double> x, double r, double s) {
  Eigen::Map<const RVector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  const RVector y = c * xv;
  return pnorm({y.data(), static_cast<std::size_t>(y.size())}, s) / pnorm(x, r);
}

double norm_mub(int d, double r, double s) {
  require_exponents(r, s);
  return std::pow(static_cast<double>(d), inverse(s) - inverse(r));
}

double norm_identity(int d, double r, double s) {
  require_exponents(r, s);
  return r >= s ? std::pow(static_cast<double>(d), inverse(s) - inverse(r)) : 1.0;
}

namespace {

std::vector<double> unit_ones(Eigen::Index n, double r) {
  std::vector<double> x(n, 1.0);
  const double nr = pnorm(x, r);
  for (double& v : x) v /= nr;
  return x;
}

std::vector<double> basis_vector(Eigen::Index n, Eigen::Index j) {
  std::vector<double> x(n, 0.0);
  x[j] = 1.0;
  return x;
}

void normalize(std::vector<double>& x, double r) {
  const double nr = pnorm(x, r);
  if (nr > 0.0)
    for (double& v : x) v /= nr;
}

NormResult make_result(const OverlapMatrix& c, double r, double s, std::vector<double> witness,
                       NormMethod method, LogBase base) {
  NormResult out;
  out.method = method;
  out.value = norm_objective(c.entries(), witness, r, s);
  out.witness = std::move(witness);
  if (c.doubly_stochastic(1e-8)) {
    const int d = static_cast<int>(c.rows());
    out.lower = norm_mub(d, r, s);
    out.upper = norm_identity(d, r, s);
  } else {
    out.lower = norm_objective(c.entries(), unit_ones(c.cols(), r), r, s);
    out.upper = kInf;
  }
  out.log_value = log_in(out.value, base);
  return out;
}

}  // namespace

std::optional<NormResult> norm_closed_form(const OverlapMatrix& c, double r, double s, LogBase base) {
  require_exponents(r, s);
  if (!c.doubly_stochastic(1e-8)) return std::nullopt;
  const Eigen::Index n = c.cols();
  const int d = static_cast<int>(n);
  if (r == 1.0 && std::isinf(s)) {
    Eigen::Index i = 0, j = 0;
    c.entries().maxCoeff(&i, &j);
    auto res = make_result(c, r, s, basis_vector(n, j), NormMethod::closed_kmu, base);
    res.value = c.max_entry();
    res.log_value = log_in(res.value, base);
    return res;
  }
  auto exact = [&](NormMethod m, std::vector<double> witness, double value, double log_exponent) {
    auto res = make_result(c, r, s, std::move(witness), m, base);
    res.value = value;
    res.log_value = log_exponent * log_dim(d, base);
    return res;
  };
  const double exponent = inverse(s) - inverse(r);
  if (s <= r) return exact(NormMethod::closed_s_le_r, unit_ones(n, r), norm_mub(d, r, s), exponent);
  if (c.constant(1e-12)) return exact(NormMethod::closed_mub, unit_ones(n, r), norm_mub(d, r, s), exponent);
  if (c.permutation(1e-12)) return exact(NormMethod::closed_identity, basis_vector(n, 0), 1.0, 0.0);
  return std::nullopt;
}

namespace {

// Exact maximizers on the boundary of the exponent range, valid for
// non-negative matrices.
std::optional<std::vector<double>> boundary_witness(const RMatrix& c, double r, double s) {
  const Eigen::Index n = c.cols();
  if (r == 1.0) {
    // Convex objective on the l1 simplex: best column.
    Eigen::Index best = 0;
    double best_v = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const RVector col = c.col(j);
      const double v = pnorm({col.data(), static_cast<std::size_t>(n)}, s);
      if (v > best_v) {
        best_v = v;
        best = j;
      }
    }
    return basis_vector(n, best);
  }
  if (std::isinf(r)) return std::vector<double>(n, 1.0);
  const double dual = r / (r - 1.0);
  if (std::isinf(s)) {
    // max_i of the dual norm of row i, attained at x_j ~ C_ij^(dual - 1).
    Eigen::Index best = 0;
    double best_v = -1.0;
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      const RVector row = c.row(i).transpose();
      const double v = pnorm({row.data(), static_cast<std::size_t>(n)}, dual);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    std::vector<double> x(n);
    for (Eigen::Index j = 0; j < n; ++j) x[j] = std::pow(c(best, j), dual - 1.0);
    normalize(x, r);
    return x;
  }
  if (s == 1.0) {
    // ||C x||_1 = <column sums, x>.
    const RVector sums = c.colwise().sum().transpose();
    const double m = sums.maxCoeff();
    std::vector<double> x(n);
    for (Eigen::Index j = 0; j < n; ++j) x[j] = m > 0.0 ? std::pow(sums(j) / m, dual - 1.0) : 1.0;
    normalize(x, r);
    return x;
  }
  return std::nullopt;
}

struct Ascent {
  const RMatrix& c;
  double r, s;

  // x <- normalize_r((C^T (C x)^(s-1))^(1/(r-1))), computed with max-scaling.
  std::vector<double> step(const std::vector<double>& x) const {
    const Eigen::Index n = c.cols();
    Eigen::Map<const RVector> xv(x.data(), n);
    RVector y = c * xv;
    const double ym = y.maxCoeff();
    if (ym <= 0.0) return x;
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = std::pow(y(i) / ym, s - 1.0);
    RVector g = c.transpose() * y;
    const double gm = g.maxCoeff();
    std::vector<double> out(n);
    const double e = 1.0 / (r - 1.0);
    for (Eigen::Index j = 0; j < n; ++j) out[j] = g(j) > 0.0 ? std::pow(g(j) / gm, e) : 0.0;
    normalize(out, r);
    return out;
  }

  double value(const std::vector<double>& x) const { return norm_objective(c, x, r, s); }

  // Extrapolate along x_new - x_old; golden-section search for the step
  // length t in [1, 64] on max(0, x_old + t (x_new - x_old)).
  std::pair<std::vector<double>, double> extrapolate(const std::vector<double>& x_old,
                                                     const std::vector<double>& x_new,
                                                     double f_new) const {
    auto point = [&](double t) {
      std::vector<double> p(x_old.size());
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::max(0.0, x_old[j] + t * (x_new[j] - x_old[j]));
      normalize(p, r);
      return p;
    };
    auto fval = [&](double t) {
      const auto p = point(t);
      return pnorm(p, r) > 0.0 ? value(p) : 0.0;
    };
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 1.0, b = 64.0;
    double t1 = b - phi * (b - a), t2 = a + phi * (b - a);
    double f1 = fval(t1), f2 = fval(t2);
    for (int it = 0; it < 40; ++it) {
      if (f1 < f2) {
        a = t1;
        t1 = t2;
        f1 = f2;
        t2 = a + phi * (b - a);
        f2 = fval(t2);
      } else {
        b = t2;
        t2 = t1;
        f2 = f1;
        t1 = b - phi * (b - a);
        f1 = fval(t1);
      }
    }
    const double t = f1 > f2 ? t1 : t2;
    auto p = point(t);
    const double fp = value(p);
    if (fp > f_new) return {std::move(p), fp};
    return {x_new, f_new};
  }
};

struct StartOutcome {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
};

StartOutcome run_start(const Ascent& ascent, std::vector<double> x, const SolverOptions& opts) {
  normalize(x, ascent.r);
  double f = ascent.value(x);
  constexpr double kStagnation = 1e-6;
  for (int it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> nx = ascent.step(x);
    double nf = ascent.value(nx);
    const double rel = std::abs(nf - f) / std::max(f, 1e-300);
    if (nf < f) {
      // Floating-point noise at a fixed point; the map is monotone.
      return {std::move(x), f, rel < opts.tolerance * 10.0};
    }
    if (rel < opts.tolerance) return {std::move(nx), nf, true};
    if (rel < kStagnation && it % 8 == 7) std::tie(nx, nf) = ascent.extrapolate(x, nx, nf);
    x = std::move(nx);
    f = nf;
  }
  return {std::move(x), f, false};
}

}  // namespace

NormResult norm_numeric(const OverlapMatrix& c, double r, double s, const SolverOptions& opts) {
  require_exponents(r, s);
  if (opts.restarts < 0 || opts.max_iterations < 1 || !(opts.tolerance > 0.0))
    throw InvalidInput("solver options must be positive");
  const Eigen::Index n = c.cols();
  const auto closed = norm_closed_form(c, r, s, opts.base);

  NormResult res;
  if (auto w = boundary_witness(c.entries(), r, s)) {
    res = make_result(c, r, s, std::move(*w), NormMethod::numeric_multistart, opts.base);
    res.starts = res.converged_starts = 1;
  } else {
    const Ascent ascent{c.entries(), r, s};
    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(n, 1.0));
    for (Eigen::Index j = 0; j < n; ++j) starts.push_back(basis_vector(n, j));
    Rng rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int k = 0; k < opts.restarts; ++k) {
      std::vector<double> x(n);
      for (double& v : x) v = 1e-3 + unif(rng);
      starts.push_back(std::move(x));
    }
    StartOutcome best;
    best.f = -1.0;
    int converged = 0;
    for (auto& start : starts) {
      StartOutcome o = run_start(ascent, std::move(start), opts);
      converged += o.converged ? 1 : 0;
      if (o.f > best.f) best = std::move(o);  // strict: earlier start wins ties
    }
    if (converged == 0)
      throw SolverFailure("norm solver: no start converged", best.f, best.x);
    res = make_result(c, r, s, std::move(best.x), NormMethod::numeric_multistart, opts.base);
    res.starts = static_cast<int>(starts.size());
    res.converged_starts = converged;
  }

  if (res.value < res.lower - kSandwichSlack || res.value > res.upper + kSandwichSlack)
    throw InternalError("numeric norm " + std::to_string(res.value) + " outside certified bounds [" +
                        std::to_string(res.lower) + ", " + std::to_string(res.upper) + "]");
  if (closed && std::abs(closed->value - res.value) > kClosedFormAgreement)
    throw InternalError("numeric norm " + std::to_string(res.value) + " disagrees with closed form " +
                        std::to_string(closed->value));
  return res;
}

NormResult norm(const OverlapMatrix& c, const WeightTriple& w, const SolverOptions& opts) {
  const double r = w.r(), s = w.s();
  if (auto closed = norm_closed_form(c, r, s, opts.base)) return *closed;
  return norm_numeric(c, r, s, opts);
}

double mu_star(double sigma2) {
  if (!(sigma2 >= -1e-12 && sigma2 <= 1.0 + 1e-10)) throw InvalidInput("sigma2 must lie in [0, 1]");
  return 1.0 / (1.0 + std::clamp(sigma2, 0.0, 1.0));
}

bool conjecture_region_contains(double mu, double lambda, double sigma2, double tol) {
  if (mu == 0.0 || lambda == 0.0) return true;
  return (1.0 - mu) * (1.0 - lambda) - mu * lambda * sigma2 * sigma2 >= -tol;
}

std::vector<double> hessian_spectrum_at_ones(const OverlapMatrix& c, double mu, double lambda) {
  if (!c.square()) throw InvalidInput("Hessian criterion needs a square overlap matrix");
  const Eigen::Index d = c.rows();
  const RMatrix h = (1.0 - mu) * (1.0 - lambda) * RMatrix::Identity(d, d) -
                    mu * lambda * c.entries().transpose() * c.entries();
  if (d == 1) return {};
  Eigen::HouseholderQR<RMatrix> qr(RMatrix::Ones(d, 1));
  const RMatrix q = RMatrix(qr.householderQ()).rightCols(d - 1);
  RMatrix reduced = q.transpose() * h * q;
  reduced = 0.5 * (reduced + reduced.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(reduced, Eigen::EigenvaluesOnly);
  const RVector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double ratio_objective_2d(double theta, double mu, double lambda, double z) {
  const double t = std::tan(theta) * std::tan(theta);
  const double r = mu <= 0.0 ? kInf : 1.0 / mu;
  const double s = lambda >= 1.0 ? kInf : 1.0 / (1.0 - lambda);
  const double num[2] = {1.0 + z * t, z + t};
  const double den[2] = {1.0, z};
  return pnorm(num, s) / pnorm(den, r);
}

std::vector<ScanPoint> scan_2d_objective(double theta, double mu, double lambda, int grid) {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 4 + 1e-15)) throw InvalidInput("theta must lie in (0, pi/4]");
  if (grid < 2) throw InvalidInput("grid must have at least 2 points");
  const double f1 = ratio_objective_2d(theta, mu, lambda, 1.0);
  std::vector<ScanPoint> out(grid);
  for (int k = 0; k < grid; ++k) {
    const double z = static_cast<double>(k) / (grid - 1);
    out[k] = {z, ratio_objective_2d(theta, mu, lambda, z) / f1};
  }
  return out;
}

}  // namespace eur
