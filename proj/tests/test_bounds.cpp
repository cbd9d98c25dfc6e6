#include "support.hpp"

#include "eur/errors.hpp"

#include <doctest.h>

using namespace eur;
using namespace eur::testing;

namespace {

SolverOptions quick(std::uint64_t seed = 0) {
  SolverOptions o;
  o.restarts = 8;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("c_lower_bound examples") {
  for (int d = 2; d <= 5; ++d)
    CHECK(c_lower_bound(mub_overlap(d), WeightTriple::unit(1.0, 1.0)) == doctest::Approx(std::log2(d)).epsilon(1e-14));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_unistochastic(3, seed);
    CHECK(c_lower_bound(c, WeightTriple::unit(1.0, 1.0)) == -std::log2(c.max_entry()));
    CHECK(std::abs(c_lower_bound(c, WeightTriple::make(0.8, 0.3, 0.5))) < 1e-15);
  }
  CHECK(c_lower_bound(mub_overlap(2), WeightTriple::make(0.0, 0.0, 0.0)) == 0.0);
}

TEST_CASE("evaluate_eur saturation cases") {
  Rng rng(1);
  for (int d = 2; d <= 4; ++d) {
    const auto x = random_basis(d, rng), y = random_basis(d, rng);
    const auto rep = evaluate_eur(DensityMatrix::maximally_mixed(d), x, y, WeightTriple::unit(0.5, 0.5));
    CHECK(rep.lhs == doctest::Approx(std::log2(d)).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(std::log2(d)).epsilon(1e-12));
    CHECK(std::abs(rep.gap) < 1e-12);
  }
  for (int d = 2; d <= 5; ++d) {
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(d);
    e0(0) = 1.0;
    const auto rep = evaluate_eur(DensityMatrix::pure(e0), ProjectiveMeasurement::computational(d),
                                  ProjectiveMeasurement::from_basis(fourier_matrix(d)), WeightTriple::unit(1.0, 1.0));
    CHECK(rep.lhs == doctest::Approx(std::log2(d)).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(std::log2(d)).epsilon(1e-12));
    CHECK(std::abs(rep.gap) < 1e-12);
    CHECK(rep.norm_method == NormMethod::closed_kmu);
  }
  CHECK_THROWS_AS(evaluate_eur(DensityMatrix::maximally_mixed(3), ProjectiveMeasurement::computational(2),
                               ProjectiveMeasurement::computational(2), WeightTriple::unit(1, 1)),
                  InvalidInput);
}

TEST_CASE("qubit no-violation sweep at 17 degrees") {
  const double theta = 17.0 * kPi / 180.0;
  const auto x = ProjectiveMeasurement::computational(2);
  const auto y = ProjectiveMeasurement::from_basis(rotation_basis_2d(theta));
  const auto c = build_overlap(x, y);
  std::vector<std::pair<WeightTriple, NormResult>> weights;
  for (double a : {0.5, 1.0})
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        const WeightTriple w = WeightTriple::make(a, a * i / 4, a * j / 4);
        weights.emplace_back(w, norm(c, w, quick()));
      }
  double min_gap = kInf;
  for (int k = 0; k < 10000; ++k) {
    const DensityMatrix rho = random_density_matrix(2, derive_seed(17, k));
    for (const auto& [w, n] : weights) min_gap = std::min(min_gap, evaluate_eur(rho, x, y, w, n, LogBase::two).gap);
  }
  CHECK(min_gap >= -1e-8);
}

TEST_CASE("qutrit no-violation sweep with pure and mixed states") {
  Rng rng(9);
  double min_gap = kInf;
  for (int pair = 0; pair < 3; ++pair) {
    const auto x = random_basis(3, rng), y = random_basis(3, rng);
    const auto c = build_overlap(x, y);
    for (const WeightTriple& w : {WeightTriple::unit(1, 1), WeightTriple::unit(0.9, 0.6), WeightTriple::unit(0.3, 1.0),
                                  WeightTriple::make(0.7, 0.7, 0.7)}) {
      const NormResult n = norm(c, w, quick(pair));
      for (int k = 0; k < 300; ++k) {
        const Eigen::VectorXcd psi = haar_random_unitary(3, rng).col(0);
        min_gap = std::min(min_gap, evaluate_eur(DensityMatrix::pure(psi), x, y, w, n, LogBase::two).gap);
        min_gap = std::min(min_gap, evaluate_eur(random_density_matrix(3, rng), x, y, w, n, LogBase::two).gap);
      }
    }
  }
  CHECK(min_gap >= -1e-8);
}

TEST_CASE("equal-weight relations") {
  CHECK(qudit_eur_rhs(0.0, 4, 0.0).value == doctest::Approx(2.0));
  CHECK(qudit_eur_rhs(0.0, 4, 0.0).conjecture);
  CHECK(qudit_eur_rhs(1.0, 3, 0.7).value == doctest::Approx(1.4));
  CHECK(qudit_eur_rhs(0.5, 2, 1.0).value == doctest::Approx(2.0));
  CHECK_THROWS_AS(qudit_eur_rhs(1.5, 2, 0.0), InvalidInput);

  CHECK(bccrr_rhs(mub_overlap(4), 0.3) == doctest::Approx(2.3));
  CHECK(bccrr_rhs(identity_overlap(3), 0.3) == doctest::Approx(0.3));
  CHECK(bccrr_rhs(rotation_overlap_2d(kPi / 6), 0.0) == doctest::Approx(-std::log2(0.75)));

  CHECK(rpz2_rhs(mub_overlap(4), 0.3) == doctest::Approx(2.3));
  CHECK(rpz2_rhs(identity_overlap(3), 0.3) == doctest::Approx(0.3));
  // Both largest entries of the qubit matrix are cos^2(theta), so the bracket collapses to c1.
  CHECK(rpz2_rhs(rotation_overlap_2d(kPi / 6), 0.0) == doctest::Approx(-std::log2(0.75)));
  RMatrix m(3, 3);
  m << 0.6, 0.3, 0.1, 0.3, 0.4, 0.3, 0.1, 0.3, 0.6;
  const auto c = OverlapMatrix::from_entries(m);
  const double k = (1.0 + std::sqrt(0.6)) / 2.0;
  CHECK(rpz2_rhs(c, 0.0) == doctest::Approx(-std::log2(0.6 * k * k + 0.6 * (1 - k * k))));
  RMatrix m2(3, 3);
  m2 << 0.7, 0.2, 0.1, 0.2, 0.5, 0.3, 0.1, 0.3, 0.6;
  const double k2 = (1.0 + std::sqrt(0.7)) / 2.0;
  CHECK(rpz2_rhs(OverlapMatrix::from_entries(m2), 0.1) ==
        doctest::Approx(0.1 - std::log2(0.7 * k2 * k2 + 0.6 * (1 - k2 * k2))));
}

TEST_CASE("state-independent comparison") {
  const auto z = compare_state_independent(rotation_overlap_2d(0.0));
  CHECK(std::abs(z.ours) < 1e-15);
  CHECK(std::abs(z.bccrr) < 1e-15);
  CHECK(std::abs(z.rpz2) < 1e-15);
  const auto m = compare_state_independent(rotation_overlap_2d(kPi / 4));
  CHECK(m.ours == doctest::Approx(1.0));
  CHECK(m.bccrr == doctest::Approx(1.0));
  CHECK(m.rpz2 == doctest::Approx(1.0));
  const auto mid = compare_state_independent(rotation_overlap_2d(kPi / 6), LogBase::two, quick());
  CHECK(mid.ours > mid.bccrr + 1e-3);
  CHECK(mid.ours > mid.rpz2 + 1e-3);
  CHECK(mid.ours_dominates);
  REQUIRE(mid.verified);
  CHECK(*mid.verified);
  CHECK(mid.c_rpz == doctest::Approx((1 + std::sqrt(0.75)) / 2));
  CHECK_THROWS_AS(compare_state_independent(OverlapMatrix::from_entries(RMatrix::Constant(2, 3, 0.5))), InvalidInput);
}

TEST_CASE("qubit dominance over random unistochastic matrices") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto row = compare_state_independent(random_unistochastic(2, seed));
    CHECK(row.ours >= std::max(row.bccrr, row.rpz2) - 1e-12);
  }
}

TEST_CASE("default weight grid") {
  const auto g = default_weight_grid(0.5);
  CHECK(!g.empty());
  for (const auto& w : g) {
    CHECK(w.alpha == 1.0);
    CHECK(conjecture_region_contains(w.mu, w.lambda, 0.5));
  }
  CHECK(default_weight_grid(0.0).size() == 21 * 21);
  CHECK_THROWS_AS(default_weight_grid(0.5, 1), InvalidInput);
}

TEST_CASE("entropy upper bound") {
  for (int d = 2; d <= 4; ++d) {
    const auto c = mub_overlap(d);
    const double l = std::log2(d);
    CHECK(entropy_upper_bound(l, l, c, default_weight_grid(0.0, 11)) == doctest::Approx(l).epsilon(1e-12));
  }
  const auto c = rotation_overlap_2d(17.0 * kPi / 180.0);
  const WeightGrid single{WeightTriple::unit(1, 1)};
  const double kmu = entropy_upper_bound(0.9, 0.9, c, single);
  CHECK(kmu == 1.8 + std::log2(c.max_entry()));
  double prev = kInf;
  for (int n : {2, 3, 5, 9, 17}) {
    WeightGrid g;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.push_back(WeightTriple::unit(double(i) / (n - 1), double(j) / (n - 1)));
    const double v = entropy_upper_bound(0.9, 0.9, c, g, quick());
    CHECK(v <= kmu);
    CHECK(v <= prev + 1e-12);  // nested lattices
    prev = v;
  }
  CHECK_THROWS_AS(entropy_upper_bound(0.9, 0.9, c, {}), InvalidInput);
  CHECK_THROWS_AS(entropy_upper_bound(0.9, 0.9, c, {WeightTriple::make(0.5, 0.5, 0.5)}), InvalidInput);
}

TEST_CASE("envelope curve") {
  WeightGrid diag;
  for (int k = 1; k <= 20; ++k) diag.push_back(WeightTriple::unit(k / 20.0, k / 20.0));
  CHECK(envelope_curve(mub_overlap(2), {0.0}, diag).front().min_sum == doctest::Approx(1.0).epsilon(1e-12));
  const auto c = rotation_overlap_2d(17.0 * kPi / 180.0);
  const auto env = envelope_curve(c, {0.0, 0.25, 0.5, 0.75, 1.0}, diag, quick());
  CHECK(env.back().min_sum == doctest::Approx(2.0).epsilon(1e-9));
  for (const auto& p : env) CHECK(p.min_sum >= p.entropy - std::log2(c.max_entry()) - 1e-12);
  CHECK(env.front().min_sum > -std::log2(c.max_entry()) + 1e-3);
  CHECK_THROWS_AS(envelope_curve(c, {0.0}, {WeightTriple::unit(0.5, 0.2)}), InvalidInput);
}

TEST_CASE("envelope lies below sampled qubit states") {
  const double theta = 17.0 * kPi / 180.0;
  const auto x = ProjectiveMeasurement::computational(2);
  const auto y = ProjectiveMeasurement::from_basis(rotation_basis_2d(theta));
  WeightGrid diag;
  for (int k = 1; k <= 20; ++k) diag.push_back(WeightTriple::unit(k / 20.0, k / 20.0));
  std::vector<double> s;
  std::vector<double> sums;
  Rng rng(12);
  for (int k = 0; k < 2000; ++k) {
    const DensityMatrix rho = k % 2 ? random_density_matrix(2, rng) : DensityMatrix::pure(haar_random_unitary(2, rng).col(0));
    s.push_back(von_neumann_entropy(rho));
    sums.push_back(shannon_entropy(measurement_distribution(rho, x)) + shannon_entropy(measurement_distribution(rho, y)));
  }
  const auto env = envelope_curve(build_overlap(x, y), s, diag, quick());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(sums[i] >= env[i].min_sum - 1e-8);
}
