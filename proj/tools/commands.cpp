#include "commands.hpp"

#include "eur/applications.hpp"
#include "eur/csv.hpp"
#include "eur/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace eur::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string base = "two";
  int restarts = 64;
  int max_iterations = 10000;
  double tolerance = 1e-11;

  SolverOptions solver() const {
    SolverOptions o;
    o.restarts = restarts;
    o.max_iterations = max_iterations;
    o.tolerance = tolerance;
    o.seed = seed;
    o.base = parse_log_base(base);
    return o;
  }
  LogBase log_base() const { return parse_log_base(base); }
  // Shared part of every canonical config string.
  std::string canonical() const {
    std::ostringstream s;
    s << "base=" << base << ";restarts=" << restarts << ";max_iter=" << max_iterations
      << ";tol=" << format_double(tolerance);
    return s.str();
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EUR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("EUR_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool solver) {
  cmd->add_option("--seed", c.seed, "random seed (default: $EUR_SEED or 0)");
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
  cmd->add_option("--base", c.base, "logarithm base: two or natural")->capture_default_str();
  if (solver) {
    cmd->add_option("--restarts", c.restarts, "random starts of the norm solver")->capture_default_str();
    cmd->add_option("--max-iter", c.max_iterations, "iterations per start")->capture_default_str();
    cmd->add_option("--tol", c.tolerance, "relative convergence tolerance")->capture_default_str();
  }
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file '" + c.out + "'");
  f << text;
  if (!f) throw InvalidInput("cannot write output file '" + c.out + "'");
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInf;
  double v = 0.0;
  try {
    std::size_t pos = 0;
    v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse exponent '" + text + "'");
  }
  if (!(v >= 1.0)) throw InvalidInput("exponents must lie in [1, inf]");
  return v;
}

json number(double x) { return std::isfinite(x) ? json(x) : json(format_double(x)); }

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw InvalidInput("grid sizes must be >= 1");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

void require_positive(int n, const char* what) {
  if (n < 1) throw InvalidInput(std::string(what) + " must be >= 1");
}

// --- norm ------------------------------------------------------------------

struct NormArgs {
  Common common;
  int mub = 0;
  int identity = 0;
  double rotation = -1.0;
  std::string matrix;
  std::string r, s;
  double mu = -1.0, lambda = -1.0, alpha = 1.0;
};

int cmd_norm(const NormArgs& a, std::ostream& out) {
  const int sources = (a.mub > 0) + (a.identity > 0) + (a.rotation >= 0.0) + !a.matrix.empty();
  if (sources != 1) throw InvalidInput("give exactly one of --mub, --identity, --rotation, --matrix");
  OverlapMatrix c = [&] {
    if (a.mub > 0) return mub_overlap(a.mub);
    if (a.identity > 0) return identity_overlap(a.identity);
    if (a.rotation >= 0.0) return rotation_overlap_2d(a.rotation);
    std::ifstream f(a.matrix);
    if (!f) throw InvalidInput("cannot read matrix file '" + a.matrix + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return overlap_from_text(buf.str());
  }();

  const bool by_exponent = !a.r.empty() || !a.s.empty();
  const bool by_weight = a.mu >= 0.0 || a.lambda >= 0.0;
  if (by_exponent == by_weight) throw InvalidInput("give either --r/--s or --mu/--lambda[/--alpha]");
  double r = 0.0, s = 0.0;
  if (by_exponent) {
    if (a.r.empty() || a.s.empty()) throw InvalidInput("both --r and --s are required");
    r = parse_exponent(a.r);
    s = parse_exponent(a.s);
  } else {
    if (a.mu < 0.0 || a.lambda < 0.0) throw InvalidInput("both --mu and --lambda are required");
    const WeightTriple w = WeightTriple::make(a.alpha, a.lambda, a.mu);
    if (w.alpha <= 0.0) throw InvalidInput("alpha must be positive");
    r = w.r();
    s = w.s();
  }

  const SolverOptions opts = a.common.solver();
  const std::optional<NormResult> closed = norm_closed_form(c, r, s, opts.base);
  const NormResult n = closed ? *closed : norm_numeric(c, r, s, opts);

  json j;
  j["r"] = number(r);
  j["s"] = number(s);
  j["base"] = a.common.base;
  j["value"] = n.value;
  j["log_value"] = n.log_value;
  j["method"] = to_string(n.method);
  j["lower"] = number(n.lower);
  j["upper"] = number(n.upper);
  j["witness"] = n.witness;
  j["starts"] = n.starts;
  j["converged_starts"] = n.converged_starts;
  emit(j.dump(2) + "\n", a.common, out);
  return 0;
}

// --- fig-region --------------------------------------------------------------

struct RegionArgs {
  Common common;
  double theta_deg = 17.0;
  int samples = 10000;
  int grid = 20;
  int entropy_points = 101;
};

int cmd_fig_region(const RegionArgs& a, std::ostream& out, std::ostream& err) {
  require_positive(a.samples, "--samples");
  require_positive(a.grid, "--grid");
  if (a.entropy_points < 2) throw InvalidInput("--entropy-points must be >= 2");
  const double theta = a.theta_deg * kPi / 180.0;
  const LogBase base = a.common.log_base();
  const auto x = ProjectiveMeasurement::computational(2);
  const auto y = ProjectiveMeasurement::from_basis(rotation_basis_2d(theta));
  const OverlapMatrix c = build_overlap(x, y);

  std::vector<std::pair<double, double>> points;
  points.reserve(a.samples + 1);
  for (int i = 0; i < a.samples; ++i) {
    const DensityMatrix rho = random_density_matrix(2, derive_seed(a.common.seed, i));
    points.emplace_back(von_neumann_entropy(rho, base), shannon_entropy(measurement_distribution(rho, x), base) +
                                                            shannon_entropy(measurement_distribution(rho, y), base));
  }
  {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    points.emplace_back(von_neumann_entropy(mixed, base), 2.0 * log_dim(2, base));
  }

  WeightGrid grid;
  for (int k = 1; k <= a.grid; ++k) grid.push_back(WeightTriple::unit(double(k) / a.grid, double(k) / a.grid));
  std::vector<double> entropies = linspace(0.0, log_dim(2, base), a.entropy_points);
  const std::size_t n_plot = entropies.size();
  for (const auto& p : points) entropies.push_back(p.first);
  const auto env = envelope_curve(c, entropies, grid, a.common.solver());

  const double c_kmu = -log_in(c.max_entry(), base);
  int violations = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].second < env[n_plot + i].min_sum - 1e-8) ++violations;

  std::ostringstream buf;
  std::ostringstream cfg;
  cfg << a.common.canonical() << ";theta_deg=" << format_double(a.theta_deg) << ";samples=" << a.samples
      << ";grid=" << a.grid << ";entropy_points=" << a.entropy_points;
  CsvWriter csv(buf, {"fig-region", a.common.seed, cfg.str()}, {"series", "S", "sum"});
  for (const auto& p : points) csv.row({std::string("sample"), p.first, p.second});
  for (std::size_t i = 0; i < n_plot; ++i) csv.row({std::string("kmu"), entropies[i], entropies[i] + c_kmu});
  for (std::size_t i = 0; i < n_plot; ++i) csv.row({std::string("envelope"), entropies[i], env[i].min_sum});
  emit(buf.str(), a.common, out);
  err << "envelope violations: " << violations << "\n";
  err << "envelope(0) = " << format_double(env[0].min_sum) << ", c_kmu = " << format_double(c_kmu) << "\n";
  return 0;
}

// --- fig-norm-profile ----------------------------------------------------------

struct ProfileArgs {
  Common common;
  double theta = kPi / 6.0;
  int points = 200;
};

int cmd_fig_norm_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  require_positive(a.points, "--points");
  const OverlapMatrix c = rotation_overlap_2d(a.theta);
  const SolverOptions opts = a.common.solver();
  const double log2d = log_dim(2, opts.base);
  const double kmu = log_in(c.max_entry(), opts.base);
  const double ms = mu_star(c.sigma2());

  std::ostringstream buf;
  std::ostringstream cfg;
  cfg << a.common.canonical() << ";theta=" << format_double(a.theta) << ";points=" << a.points;
  CsvWriter csv(buf, {"fig-norm-profile", a.common.seed, cfg.str()},
                {"mu", "log_norm", "mub_line", "kmu_asymptote", "excess", "method"});
  double crossing = kInf;
  for (double mu : linspace(0.0, 1.0, a.points)) {
    const NormResult n = norm(c, WeightTriple::unit(mu, mu), opts);
    const double mub = (1.0 - 2.0 * mu) * log2d;
    const double excess = n.log_value - mub;
    if (excess > 1e-7 && crossing == kInf) crossing = mu;
    csv.row({mu, n.log_value, mub, kmu, excess, to_string(n.method)});
  }
  emit(buf.str(), a.common, out);
  err << "mu_star = " << format_double(ms) << ", first excess at mu = " << format_double(crossing) << "\n";
  return 0;
}

// --- fig-compare ---------------------------------------------------------------

struct CompareArgs {
  Common common;
  bool random = false;
  int theta_points = 91;
  std::vector<int> dims{2, 3, 4, 8, 12};
  int samples = 1000;
  bool verify = false;
};

int cmd_fig_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const LogBase base = a.common.log_base();
  const std::optional<SolverOptions> verify =
      a.verify ? std::optional<SolverOptions>(a.common.solver()) : std::nullopt;
  std::ostringstream buf;
  std::ostringstream cfg;
  cfg << a.common.canonical() << ";verify=" << a.verify;
  if (!a.random) {
    require_positive(a.theta_points, "--theta-points");
    cfg << ";mode=theta;theta_points=" << a.theta_points;
    CsvWriter csv(buf, {"fig-compare", a.common.seed, cfg.str()},
                  {"theta", "c1", "c2", "sigma2", "ours", "bccrr", "rpz2", "ours_dominates", "verified"});
    for (double theta : linspace(0.0, kPi / 4.0, a.theta_points)) {
      const ComparisonRow r = compare_state_independent(rotation_overlap_2d(theta), base, verify);
      csv.row({theta, r.c1, r.c2, r.sigma2, r.ours, r.bccrr, r.rpz2, r.ours_dominates,
               r.verified ? std::string(*r.verified ? "1" : "0") : std::string("")});
    }
  } else {
    require_positive(a.samples, "--samples");
    cfg << ";mode=random;samples=" << a.samples << ";dims=";
    for (int d : a.dims) cfg << d << ',';
    CsvWriter csv(buf, {"fig-compare", a.common.seed, cfg.str()},
                  {"d", "samples", "dominating", "percentage", "verified", "unverified"});
    for (int d : a.dims) {
      if (d < 2) throw InvalidInput("dimensions must be >= 2");
      long long dominating = 0, verified = 0, unverified = 0;
      const std::uint64_t dseed = derive_seed(a.common.seed, static_cast<std::uint64_t>(d));
      for (int i = 0; i < a.samples; ++i) {
        const OverlapMatrix c = from_unitary(haar_random_unitary(d, derive_seed(dseed, i)));
        const ComparisonRow r = compare_state_independent(c, base, verify);
        dominating += r.ours_dominates;
        if (r.verified) (*r.verified ? verified : unverified) += 1;
      }
      csv.row({static_cast<long long>(d), static_cast<long long>(a.samples), dominating,
               100.0 * static_cast<double>(dominating) / a.samples, verified, unverified});
      err << "d = " << d << ": " << format_double(100.0 * static_cast<double>(dominating) / a.samples) << "%\n";
    }
  }
  emit(buf.str(), a.common, out);
  return 0;
}

// --- werner ------------------------------------------------------------------

struct WernerArgs {
  Common common;
  std::vector<double> phis{-1.0, -0.5, -0.1};
  int grid = 50;
};

int cmd_werner(const WernerArgs& a, std::ostream& out, std::ostream& err) {
  if (a.grid < 2) throw InvalidInput("--grid must be >= 2");
  const auto axis = linspace(0.0, kPi / 4.0, a.grid);
  std::vector<std::pair<double, double>> thetas;
  for (double ta : axis)
    for (double tb : axis) thetas.emplace_back(ta, tb);

  std::ostringstream buf;
  std::ostringstream cfg;
  cfg << "base=" << a.common.base << ";grid=" << a.grid << ";phis=";
  for (double p : a.phis) cfg << format_double(p) << ',';
  CsvWriter csv(buf, {"werner", a.common.seed, cfg.str()}, {"theta_a", "theta_b", "phi", "detected"});
  for (double phi : a.phis) {
    long long detected = 0;
    for (const WernerPoint& p : werner_detection_scan(phi, thetas, a.common.log_base())) {
      csv.row({p.theta_a, p.theta_b, p.phi, p.detected});
      detected += p.detected;
    }
    err << "phi = " << format_double(phi) << ": " << detected << " of " << thetas.size() << " detected\n";
  }
  emit(buf.str(), a.common, out);
  return 0;
}

// --- conjecture-fuzz ------------------------------------------------------------

struct FuzzArgs {
  Common common;
  std::vector<int> dims{2, 3, 4};
  int samples = 1000;
  int grid = 10;
  std::string counterexamples;
};

int cmd_conjecture_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  require_positive(a.samples, "--samples");
  require_positive(a.grid, "--grid");
  const SolverOptions opts = a.common.solver();
  std::ostringstream buf, dump;
  std::ostringstream cfg;
  cfg << a.common.canonical() << ";samples=" << a.samples << ";grid=" << a.grid << ";dims=";
  for (int d : a.dims) cfg << d << ',';
  const Provenance prov{"conjecture-fuzz", a.common.seed, cfg.str()};
  CsvWriter csv(buf, prov, {"d", "samples", "points", "counterexamples", "max_excess"});
  CsvWriter cex(dump, prov, {"d", "sample", "mu", "lambda", "sigma2", "excess", "matrix", "witness"});
  long long total = 0;
  for (int d : a.dims) {
    if (d < 2) throw InvalidInput("dimensions must be >= 2");
    long long points = 0, hits = 0;
    double max_excess = -kInf;
    const std::uint64_t dseed = derive_seed(a.common.seed, static_cast<std::uint64_t>(d));
    for (int i = 0; i < a.samples; ++i) {
      const OverlapMatrix c = from_unitary(haar_random_unitary(d, derive_seed(dseed, i)));
      const double sigma2 = std::min(c.sigma2(), 1.0);
      for (int im = 1; im <= a.grid; ++im)
        for (int il = 1; il <= a.grid; ++il) {
          const double mu = double(im) / a.grid, lambda = double(il) / a.grid;
          // mu + lambda <= 1 is a theorem, not part of the conjecture.
          if (mu + lambda <= 1.0 || !conjecture_region_contains(mu, lambda, sigma2)) continue;
          const WeightTriple w = WeightTriple::unit(lambda, mu);
          const NormResult n = norm_numeric(c, w.r(), w.s(), opts);
          const double excess = n.log_value - (1.0 - lambda - mu) * log_dim(d, opts.base);
          ++points;
          max_excess = std::max(max_excess, excess);
          if (excess > 1e-7) {
            ++hits;
            std::ostringstream m, wit;
            for (Eigen::Index r = 0; r < c.rows(); ++r)
              for (Eigen::Index k = 0; k < c.cols(); ++k) m << (r || k ? " " : "") << format_double(c(r, k));
            for (std::size_t k = 0; k < n.witness.size(); ++k) wit << (k ? " " : "") << format_double(n.witness[k]);
            cex.row({static_cast<long long>(d), static_cast<long long>(i), mu, lambda, sigma2, excess, m.str(),
                     wit.str()});
          }
        }
    }
    total += hits;
    csv.row({static_cast<long long>(d), static_cast<long long>(a.samples), points, hits, max_excess});
    err << "d = " << d << ": " << hits << " counterexample candidates in " << points << " points\n";
  }
  emit(buf.str(), a.common, out);
  if (!a.counterexamples.empty()) {
    Common c = a.common;
    c.out = a.counterexamples;
    emit(dump.str(), c, out);
  }
  if (total > 0) err << "conjecture violated numerically: " << total << " candidates\n";
  return 0;
}

// --- randomness / eavesdropper --------------------------------------------------

struct RandomnessArgs {
  Common common;
  int samples = 100;
  int grid = 21;
};

int cmd_randomness(const RandomnessArgs& a, std::ostream& out) {
  require_positive(a.samples, "--samples");
  if (a.grid < 2) throw InvalidInput("--grid must be >= 2");
  const SolverOptions opts = a.common.solver();
  const double log_d = log_dim(2, opts.base);
  std::ostringstream buf;
  std::ostringstream cfg;
  cfg << a.common.canonical() << ";samples=" << a.samples << ";grid=" << a.grid;
  CsvWriter csv(buf, {"randomness", a.common.seed, cfg.str()},
                {"theta", "H_X", "H_Y", "bound_numeric", "bound_analytic", "flag"});
  Rng rng(a.common.seed);
  std::uniform_real_distribution<double> angle(0.0, kPi / 4.0);
  for (int i = 0; i < a.samples; ++i) {
    const double theta = angle(rng);
    const DensityMatrix rho = random_density_matrix(2, rng);
    double hx = shannon_entropy(measurement_distribution(rho, ProjectiveMeasurement::computational(2)), opts.base);
    double hy = shannon_entropy(
        measurement_distribution(rho, ProjectiveMeasurement::from_basis(rotation_basis_2d(theta))), opts.base);
    if (hx < hy) std::swap(hx, hy);  // gamma <= 1; the 2x2 overlap matrix is symmetric
    const OverlapMatrix c = rotation_overlap_2d(theta);
    const double sigma2 = std::min(c.sigma2(), 1.0);
    const double numeric = randomness_bound_numeric(hx, hy, c, default_weight_grid(sigma2, a.grid), opts, true);
    const double analytic = randomness_bound_analytic(EntropyDeficits::from_entropies(hx, hy, log_d), sigma2).value;
    csv.row({theta, hx, hy, numeric, analytic, std::abs(numeric - analytic) <= 1e-6});
  }
  emit(buf.str(), a.common, out);
  return 0;
}

struct EveArgs {
  Common common;
  double h_x = 0.0, h_y = 0.0, sigma2 = 0.0;
  int d_a = 2, d_b = 2;
};

int cmd_eavesdropper(const EveArgs& a, std::ostream& out) {
  const ConjecturalValue v = eavesdropper_entropy_bound(a.h_x, a.h_y, a.d_a, a.d_b, a.sigma2, a.common.log_base());
  json j;
  j["bound"] = v.value;
  j["conjecture"] = v.conjecture;
  j["base"] = a.common.base;
  emit(j.dump(2) + "\n", a.common, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic uncertainty relations from overlap-matrix operator norms"};
  app.require_subcommand(1);
  std::uint64_t seed0 = 0;
  try {
    seed0 = default_seed();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  NormArgs norm_a;
  RegionArgs region_a;
  ProfileArgs profile_a;
  CompareArgs compare_a;
  WernerArgs werner_a;
  FuzzArgs fuzz_a;
  RandomnessArgs rand_a;
  EveArgs eve_a;
  for (Common* c : {&norm_a.common, &region_a.common, &profile_a.common, &compare_a.common, &werner_a.common,
                    &fuzz_a.common, &rand_a.common, &eve_a.common})
    c->seed = seed0;

  auto* norm_cmd = app.add_subcommand("norm", "r -> s operator norm of an overlap matrix (JSON)");
  add_common(norm_cmd, norm_a.common, true);
  norm_cmd->add_option("--mub", norm_a.mub, "constant 1/d matrix of dimension d");
  norm_cmd->add_option("--identity", norm_a.identity, "identity matrix of dimension d");
  norm_cmd->add_option("--rotation", norm_a.rotation, "2x2 matrix of a basis rotation by theta (radians)");
  norm_cmd->add_option("--matrix", norm_a.matrix, "whitespace separated matrix file");
  norm_cmd->add_option("--r", norm_a.r, "input exponent (number or inf)");
  norm_cmd->add_option("--s", norm_a.s, "output exponent (number or inf)");
  norm_cmd->add_option("--mu", norm_a.mu, "weight of H(Y)");
  norm_cmd->add_option("--lambda", norm_a.lambda, "weight of H(X)");
  norm_cmd->add_option("--alpha", norm_a.alpha, "weight of S(rho)")->capture_default_str();

  auto* region_cmd = app.add_subcommand("fig-region", "sampled (S, H_X + H_Y) cloud with linear bounds (CSV)");
  add_common(region_cmd, region_a.common, true);
  region_cmd->add_option("--theta-deg", region_a.theta_deg, "relative angle of the qubit bases in degrees")
      ->capture_default_str();
  region_cmd->add_option("--samples", region_a.samples, "random states")->capture_default_str();
  region_cmd->add_option("--grid", region_a.grid, "weights lambda = mu = k/grid")->capture_default_str();
  region_cmd->add_option("--entropy-points", region_a.entropy_points, "points on the S axis")->capture_default_str();

  auto* profile_cmd = app.add_subcommand("fig-norm-profile", "log norm along mu = lambda for a qubit rotation (CSV)");
  add_common(profile_cmd, profile_a.common, true);
  profile_cmd->add_option("--theta", profile_a.theta, "rotation angle in radians")->capture_default_str();
  profile_cmd->add_option("--points", profile_a.points, "points on [0, 1]")->capture_default_str();

  auto* compare_cmd = app.add_subcommand("fig-compare", "state-independent constants of three relations (CSV)");
  add_common(compare_cmd, compare_a.common, true);
  compare_cmd->add_flag("--random", compare_a.random, "Haar random overlap matrices instead of a qubit sweep");
  compare_cmd->add_option("--theta-points", compare_a.theta_points, "points on [0, pi/4]")->capture_default_str();
  compare_cmd->add_option("--dims", compare_a.dims, "dimensions for --random")->delimiter(',');
  compare_cmd->add_option("--samples", compare_a.samples, "matrices per dimension")->capture_default_str();
  compare_cmd->add_flag("--verify", compare_a.verify, "check the conjectured constant numerically");

  auto* werner_cmd = app.add_subcommand("werner", "detection masks for two-qubit Werner states (CSV)");
  add_common(werner_cmd, werner_a.common, false);
  werner_cmd->add_option("--phi", werner_a.phis, "Werner parameters")->delimiter(',');
  werner_cmd->add_option("--grid", werner_a.grid, "points per angle axis")->capture_default_str();

  auto* fuzz_cmd = app.add_subcommand("conjecture-fuzz", "search for overlap matrices beating the MUB norm (CSV)");
  add_common(fuzz_cmd, fuzz_a.common, true);
  fuzz_cmd->add_option("--dims", fuzz_a.dims, "dimensions")->delimiter(',');
  fuzz_cmd->add_option("--samples", fuzz_a.samples, "matrices per dimension")->capture_default_str();
  fuzz_cmd->add_option("--grid", fuzz_a.grid, "weights mu, lambda = k/grid")->capture_default_str();
  fuzz_cmd->add_option("--counterexamples", fuzz_a.counterexamples, "CSV file for counterexample candidates");

  auto* rand_cmd = app.add_subcommand("randomness", "qubit randomness bounds, numeric vs closed form (CSV)");
  add_common(rand_cmd, rand_a.common, true);
  rand_cmd->add_option("--samples", rand_a.samples, "random (state, angle) inputs")->capture_default_str();
  rand_cmd->add_option("--grid", rand_a.grid, "weight lattice points per axis")->capture_default_str();

  auto* eve_cmd = app.add_subcommand("eavesdropper", "upper bound on an eavesdropper's entropy (JSON)");
  add_common(eve_cmd, eve_a.common, false);
  eve_cmd->add_option("--hx", eve_a.h_x, "H(X_AB)")->required();
  eve_cmd->add_option("--hy", eve_a.h_y, "H(Y_AB)")->required();
  eve_cmd->add_option("--da", eve_a.d_a, "dimension of A")->capture_default_str();
  eve_cmd->add_option("--db", eve_a.d_b, "dimension of B")->capture_default_str();
  eve_cmd->add_option("--sigma2", eve_a.sigma2, "second singular value of the joint overlap matrix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*norm_cmd) return cmd_norm(norm_a, out);
    if (*region_cmd) return cmd_fig_region(region_a, out, err);
    if (*profile_cmd) return cmd_fig_norm_profile(profile_a, out, err);
    if (*compare_cmd) return cmd_fig_compare(compare_a, out, err);
    if (*werner_cmd) return cmd_werner(werner_a, out, err);
    if (*fuzz_cmd) return cmd_conjecture_fuzz(fuzz_a, out, err);
    if (*rand_cmd) return cmd_randomness(rand_a, out);
    if (*eve_cmd) return cmd_eavesdropper(eve_a, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace eur::cli
