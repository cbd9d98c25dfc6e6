#include "support.hpp"

#include "eur/errors.hpp"

#include <doctest.h>

using namespace eur;
using namespace eur::testing;

namespace {

SolverOptions quick(std::uint64_t seed = 0) {
  SolverOptions o;
  o.restarts = 16;
  o.seed = seed;
  return o;
}

// Scalar p-norm of a 2-vector, written without the library.
double norm2(double a, double b, double p) {
  if (std::isinf(p)) return std::max(std::abs(a), std::abs(b));
  return std::pow(std::pow(std::abs(a), p) + std::pow(std::abs(b), p), 1.0 / p);
}

// sup over x = (1, z), z in [0, 1] and its mirror (z, 1), of ||C x||_s / ||x||_r.
double brute_force_2x2(const RMatrix& c, double r, double s, int points) {
  double best = 0.0;
  for (int k = 0; k < points; ++k) {
    const double z = double(k) / (points - 1);
    for (int flip = 0; flip < 2; ++flip) {
      const double x0 = flip ? z : 1.0, x1 = flip ? 1.0 : z;
      best = std::max(best, norm2(c(0, 0) * x0 + c(0, 1) * x1, c(1, 0) * x0 + c(1, 1) * x1, s) / norm2(x0, x1, r));
    }
  }
  return best;
}

// Max of ||C x||_s / ||x||_r over a simplex lattice with `n` steps (d = 3).
double lattice_3(const RMatrix& c, double r, double s, int n) {
  double best = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const std::vector<double> x{double(i) / n, double(j) / n, double(n - i - j) / n};
      best = std::max(best, norm_objective(c, x, r, s));
    }
  return best;
}

}  // namespace

TEST_CASE("weight triples") {
  const WeightTriple w = WeightTriple::make(1.0, 0.25, 0.5);
  CHECK(w.r() == 2.0);
  CHECK(w.s() == doctest::Approx(4.0 / 3.0));
  CHECK(std::isinf(WeightTriple::unit(1.0, 0.5).s()));
  CHECK(std::isinf(WeightTriple::unit(0.5, 0.0).r()));
  CHECK_THROWS_AS(WeightTriple::make(0.5, 0.6, 0.1), InvalidInput);
  CHECK_THROWS_AS(WeightTriple::make(1.2, 0.1, 0.1), InvalidInput);
  CHECK_THROWS_AS(WeightTriple::make(1.0, -0.1, 0.1), InvalidInput);
  CHECK_THROWS_AS(WeightTriple::make(0.0, 0.0, 0.0).r(), InvalidInput);
}

TEST_CASE("p-norms") {
  const std::vector<double> v{3.0, 4.0};
  CHECK(pnorm(v, 2.0) == doctest::Approx(5.0));
  CHECK(pnorm(v, 1.0) == 7.0);
  CHECK(pnorm(v, kInf) == 4.0);
  const std::vector<double> big{1e200, 1e200};
  CHECK(pnorm(big, 2.0) == doctest::Approx(std::sqrt(2.0) * 1e200));
}

TEST_CASE("norm_mub and norm_identity") {
  CHECK(norm_mub(4, 1.0, kInf) == doctest::Approx(0.25).epsilon(1e-15));
  for (int d = 2; d <= 6; ++d) CHECK(norm_mub(d, 2.5, 2.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm_mub(2, 2.0, 4.0) == doctest::Approx(std::pow(2.0, 0.25 - 0.5)).epsilon(1e-15));
  CHECK(norm_identity(3, 1.0, kInf) == 1.0);
  CHECK(norm_identity(3, kInf, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(norm_identity(5, 3.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(norm_mub(2, 0.5, 2.0), InvalidInput);
}

TEST_CASE("closed forms") {
  const auto c = rotation_overlap_2d(kPi / 6);
  const auto lemma = norm_closed_form(c, 2.0, 2.0);
  REQUIRE(lemma);
  CHECK(lemma->value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lemma->method == NormMethod::closed_s_le_r);

  const auto kmu = norm_closed_form(c, 1.0, kInf);
  REQUIRE(kmu);
  CHECK(kmu->value == c.max_entry());
  CHECK(kmu->value == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(kmu->method == NormMethod::closed_kmu);

  CHECK_FALSE(norm_closed_form(rotation_overlap_2d(kPi / 8), 2.0, 4.0));

  const auto mub = norm_closed_form(mub_overlap(3), 1.5, 7.0);
  REQUIRE(mub);
  CHECK(mub->method == NormMethod::closed_mub);
  CHECK(mub->value == doctest::Approx(norm_mub(3, 1.5, 7.0)).epsilon(1e-14));

  RMatrix perm(3, 3);
  perm << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  const auto p = norm_closed_form(OverlapMatrix::from_entries(perm), 1.5, 7.0);
  REQUIRE(p);
  CHECK(p->method == NormMethod::closed_identity);
  CHECK(p->value == doctest::Approx(1.0).epsilon(1e-14));

  RMatrix not_ds = RMatrix::Constant(2, 2, 0.3);
  CHECK_FALSE(norm_closed_form(OverlapMatrix::from_entries(not_ds), 2.0, 2.0));
}

TEST_CASE("numeric norm matches the proven regime s <= r") {
  const auto n = norm_numeric(rotation_overlap_2d(kPi / 6), 2.0, 2.0, quick());
  CHECK(std::abs(n.value - 1.0) < 1e-9);
  CHECK(n.method == NormMethod::numeric_multistart);
  Rng rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 2; d <= 6; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = random_unistochastic(d, derive_seed(d, trial));
      const double s = 1.0 + 4.0 * u(rng);
      const double r = s + 4.0 * u(rng);
      const auto m = norm_numeric(c, r, s, quick(trial));
      CHECK(std::abs(m.value - std::pow(double(d), 1.0 / s - 1.0 / r)) < 1e-8);
    }
}

TEST_CASE("KMU endpoint is exact") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_unistochastic(2 + seed % 5, seed);
    CHECK(norm(c, WeightTriple::unit(1.0, 1.0)).value == c.max_entry());
    CHECK(norm_numeric(c, 1.0, kInf, quick()).value == c.max_entry());
  }
}

TEST_CASE("qubit rotation: numeric norm vs a dense ratio scan") {
  const auto c = rotation_overlap_2d(kPi / 8);
  const double r = 1.0 / 0.9, s = 1.0 / 0.1;
  const auto n = norm_numeric(c, r, s, quick());
  const double oracle = brute_force_2x2(c.entries(), r, s, 1000001);
  CHECK(std::abs(n.value - oracle) < 1e-6);
  CHECK(n.value >= oracle - 1e-12);
}

TEST_CASE("qubit rotation: random exponents vs the ratio scan") {
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = rotation_overlap_2d(kPi / 4 * u(rng));
    const double mu = u(rng), lambda = u(rng);
    if (mu < 1e-3 || lambda > 0.999) continue;
    const double r = 1.0 / mu, s = 1.0 / (1.0 - lambda);
    CHECK(std::abs(norm(c, WeightTriple::unit(lambda, mu), quick(trial)).value -
                   brute_force_2x2(c.entries(), r, s, 20001)) < 1e-6);
  }
}

TEST_CASE("d = 3: numeric norm dominates a simplex lattice search") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto c = random_unistochastic(3, seed);
    const double r = 1.0 / 0.85, s = 1.0 / 0.2;
    const double v = norm_numeric(c, r, s, quick(seed)).value;
    const double lattice = lattice_3(c.entries(), r, s, 300);
    CHECK(v >= lattice - 1e-12);
    CHECK(v - lattice < 1e-3);
  }
}

TEST_CASE("norm profile along mu = lambda for theta = pi/6") {
  const auto c = rotation_overlap_2d(kPi / 6);
  for (int k = 0; k <= 50; ++k) {
    const double mu = double(k) / 50;
    const auto n = norm(c, WeightTriple::unit(mu, mu), quick());
    const double mub = 1.0 - 2.0 * mu;
    if (mu <= 2.0 / 3.0) CHECK(std::abs(n.log_value - mub) < 1e-7);
    if (mu >= 0.7) CHECK(n.log_value > mub + 1e-7);
  }
  CHECK(norm(c, WeightTriple::unit(1.0, 1.0)).log_value == doctest::Approx(std::log2(0.75)).epsilon(1e-15));
  CHECK(norm(c, WeightTriple::unit(0.5, 0.5)).log_value == doctest::Approx(0.0));
}

TEST_CASE("norm dispatch examples") {
  for (int d = 2; d <= 5; ++d)
    for (double m : {0.2, 0.5, 0.8, 1.0}) {
      const auto n = norm(mub_overlap(d), WeightTriple::unit(m, m));
      CHECK(n.log_value == doctest::Approx((1.0 - 2.0 * m) * std::log2(d)).epsilon(1e-12));
    }
  const auto c = random_unistochastic(4, 3);
  const auto n = norm(c, WeightTriple::make(0.8, 0.3, 0.4));
  CHECK(n.method == NormMethod::closed_s_le_r);
  CHECK(n.value == doctest::Approx(std::pow(4.0, (0.8 - 0.3) / 0.8 - 0.4 / 0.8)).epsilon(1e-14));
  const auto nat = norm(c, WeightTriple::unit(1.0, 1.0), SolverOptions{.base = LogBase::natural});
  CHECK(nat.log_value == doctest::Approx(std::log(c.max_entry())).epsilon(1e-15));
}

TEST_CASE("sandwich bounds and witness consistency") {
  Rng rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 4;
    const auto c = random_unistochastic(d, derive_seed(99, trial));
    const double mu = 0.05 + 0.95 * u(rng), lambda = 0.95 * u(rng);
    const double r = 1.0 / mu, s = 1.0 / (1.0 - lambda);
    const auto n = norm_numeric(c, r, s, quick(trial));
    CHECK(n.value >= norm_mub(d, r, s) - 1e-9);
    CHECK(n.value <= norm_identity(d, r, s) + 1e-9);
    CHECK(std::abs(norm_objective(c.entries(), n.witness, r, s) - n.value) < 1e-10);
    CHECK(std::abs(pnorm(n.witness, r) - 1.0) < 1e-10);
    for (double x : n.witness) CHECK(x >= 0.0);
  }
}

TEST_CASE("norm is non-increasing along mu = lambda") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto c = random_unistochastic(3, derive_seed(7, seed));
    double prev = kInf;
    for (int k = 0; k < 50; ++k) {
      const double mu = double(k) / 49;
      const double v = norm(c, WeightTriple::unit(mu, mu), quick(seed)).value;
      CHECK(v <= prev + 1e-9);
      prev = v;
    }
  }
}

TEST_CASE("solver failure and invalid exponents") {
  SolverOptions o = quick();
  o.max_iterations = 1;
  // The all-ones vector is a fixed point for doubly stochastic C, so use a generic matrix.
  RMatrix g(2, 2);
  g << 0.9, 0.3, 0.2, 0.5;
  CHECK_THROWS_AS(norm_numeric(OverlapMatrix::from_entries(g), 1.2, 9.0, o), SolverFailure);
  o.max_iterations = 10000;
  const auto ok = norm_numeric(OverlapMatrix::from_entries(g), 1.2, 9.0, o);
  CHECK(ok.value >= ok.lower);
  CHECK(std::isinf(ok.upper));
  CHECK_THROWS_AS(norm_numeric(rotation_overlap_2d(kPi / 8), 0.5, 2.0), InvalidInput);
  o.max_iterations = 0;
  CHECK_THROWS_AS(norm_numeric(rotation_overlap_2d(kPi / 8), 1.2, 9.0, o), InvalidInput);
}

TEST_CASE("numeric norm is deterministic") {
  const auto c = random_unistochastic(4, 8);
  const auto a = norm_numeric(c, 1.1, 8.0, quick(5));
  const auto b = norm_numeric(c, 1.1, 8.0, quick(5));
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("mu_star and the conjectured region") {
  CHECK(mu_star(0.0) == 1.0);
  CHECK(mu_star(1.0) == 0.5);
  CHECK(mu_star(0.5) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(mu_star(1.5), InvalidInput);
  for (double s2 : {0.0, 0.3, 1.0}) CHECK(conjecture_region_contains(0.5, 0.5, s2));
  CHECK(conjecture_region_contains(1.0, 1.0, 0.0));
  CHECK_FALSE(conjecture_region_contains(0.7, 0.7, 0.5));
  CHECK(conjecture_region_contains(0.0, 1.0, 1.0));
  CHECK(conjecture_region_contains(1.0, 0.0, 1.0));
}

TEST_CASE("Hessian spectrum at the all-ones vector") {
  for (double e : hessian_spectrum_at_ones(mub_overlap(4), 0.9, 0.9)) CHECK(e == doctest::Approx(0.01).epsilon(1e-12));
  const auto h = hessian_spectrum_at_ones(rotation_overlap_2d(kPi / 6), 2.0 / 3.0, 2.0 / 3.0);
  REQUIRE(h.size() == 1);
  CHECK(std::abs(h[0]) < 1e-10);
  const auto id = hessian_spectrum_at_ones(identity_overlap(3), 0.6, 0.6);
  REQUIRE(id.size() == 2);
  for (double e : id) CHECK(e == doctest::Approx(-0.2).epsilon(1e-12));
  RMatrix rect = RMatrix::Constant(2, 3, 0.5);
  CHECK_THROWS_AS(hessian_spectrum_at_ones(OverlapMatrix::from_entries(rect), 0.5, 0.5), InvalidInput);
}

TEST_CASE("Hessian sign agrees with the region test") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_unistochastic(2 + seed % 4, derive_seed(31, seed));
    for (int i = 1; i <= 20; ++i)
      for (int j = 1; j <= 20; ++j) {
        const double mu = i / 20.0, lambda = j / 20.0;
        const double lhs = (1 - mu) * (1 - lambda), rhs = mu * lambda * c.sigma2() * c.sigma2();
        if (std::abs(lhs - rhs) < 1e-9) continue;
        const auto h = hessian_spectrum_at_ones(c, mu, lambda);
        CHECK((h.front() >= -1e-9) == conjecture_region_contains(mu, lambda, c.sigma2()));
        ++compared;
      }
  }
  CHECK(compared > 3000);
}

TEST_CASE("qubit ratio objective") {
  const double t = kPi / 8;
  const double ms = 1.0 / (2.0 * std::cos(t) * std::cos(t));
  auto argmax = [&](double mu) {
    const auto scan = scan_2d_objective(t, mu, mu, 2001);
    return std::max_element(scan.begin(), scan.end(), [](auto& a, auto& b) { return a.ratio < b.ratio; })->z;
  };
  CHECK(argmax(ms - 0.02) == 1.0);
  CHECK(argmax(ms + 0.02) < 1.0);
  for (double z : {0.1, 0.3, 0.77})
    for (double mu : {0.4, 0.8, 0.95})
      CHECK(ratio_objective_2d(t, mu, mu, z) == doctest::Approx(ratio_objective_2d(t, mu, mu, 1.0 / z)).epsilon(1e-12));
  // cos^2(theta) sup f equals the norm.
  const auto c = rotation_overlap_2d(t);
  const auto scan = scan_2d_objective(t, 0.9, 0.9, 100001);
  double best = 0.0;
  for (const auto& p : scan) best = std::max(best, p.ratio);
  const double f1 = ratio_objective_2d(t, 0.9, 0.9, 1.0);
  CHECK(std::cos(t) * std::cos(t) * f1 * best ==
        doctest::Approx(norm(c, WeightTriple::unit(0.9, 0.9)).value).epsilon(1e-8));
  CHECK_THROWS_AS(scan_2d_objective(0.0, 0.5, 0.5, 10), InvalidInput);
}
