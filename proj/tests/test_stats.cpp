#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cayley/experiments.hpp"
#include "cayley/parallel.hpp"
#include "cayley/stats.hpp"

using namespace cayley;
using namespace cayley::stats;

namespace {

std::vector<double> normal_samples(std::size_t count, double mean, double sd, std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<double> xs;
  while (xs.size() < count) {
    const double u1 = 1.0 - rng.uniform01();
    const double u2 = rng.uniform01();
    xs.push_back(mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2));
  }
  return xs;
}

}  // namespace

TEST_CASE("empirical distribution") {
  EmpiricalDistribution d;
  d.add(1);
  d.add(2, 3);
  CHECK(d.total() == 4);
  CHECK(d.count(2) == 3);
  CHECK(d.count(7) == 0);
  CHECK(d.mean() == doctest::Approx(1.75));
  EmpiricalDistribution other(std::vector<int>{1, 1});
  d.merge(other);
  CHECK(d.count(1) == 3);
  CHECK(d.probabilities().at(1) == doctest::Approx(0.5));
}

TEST_CASE("total variation") {
  const std::map<std::int64_t, double> p{{0, 0.5}, {1, 0.5}};
  const std::map<std::int64_t, double> q{{1, 0.25}, {2, 0.75}};
  CHECK(total_variation(p, q) == doctest::Approx(0.75));
  CHECK(total_variation(p, p) == 0.0);
  const std::map<std::int64_t, double> bad{{0, 0.4}};
  CHECK_THROWS_AS(total_variation(p, bad), std::invalid_argument);
  CHECK(total_variation(EmpiricalDistribution(std::vector<int>{0, 1}), EmpiricalDistribution(std::vector<int>{1, 2})) ==
        doctest::Approx(0.5));
}

TEST_CASE("chi-square") {
  CHECK(chi_square_survival(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(chi_square_survival(0.0, 3) == 1.0);
  const std::vector<std::uint64_t> even{100, 100, 100};
  const auto flat = chi_square_uniform(even);
  CHECK(flat.statistic == 0.0);
  CHECK(flat.degrees_of_freedom == 2);
  CHECK(flat.p_value == doctest::Approx(1.0));
  const std::vector<std::uint64_t> skewed{150, 100, 50};
  const auto off = chi_square_uniform(skewed);
  CHECK(off.statistic == doctest::Approx(50.0));
  CHECK(off.p_value < 1e-10);
  CHECK_THROWS_AS(chi_square_uniform(std::vector<std::uint64_t>{10}), std::invalid_argument);
  CHECK_THROWS_AS(chi_square_uniform(std::vector<std::uint64_t>{3, 4}), std::invalid_argument);
}

TEST_CASE("kolmogorov-smirnov") {
  // Large-sample tail at the classical 5% point.
  CHECK(kolmogorov_survival(1.3581 / 1000.0, 1000000) == doctest::Approx(0.05).epsilon(0.01));
  CHECK(kolmogorov_survival(0.0, 100) == 1.0);
  const auto good = ks_test_normal(normal_samples(5000, 0.0, 0.25, 1), 0.0, 1.0 / 16);
  CHECK(good.p_value > 1e-3);
  const auto shifted = ks_test_normal(normal_samples(5000, 0.05, 0.25, 2), 0.0, 1.0 / 16);
  CHECK(shifted.p_value < 1e-6);
  CHECK_THROWS_AS(ks_test_normal({}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("sample moments") {
  const std::vector<double> xs{1, 2, 3, 4};
  CHECK(sample_mean(xs) == doctest::Approx(2.5));
  CHECK(sample_variance(xs) == doctest::Approx(5.0 / 3));
}

TEST_CASE("meir-moon constant") {
  const double rho = meir_moon_constant();
  CHECK(rho * std::exp(rho) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rho == doctest::Approx(0.5671432904097838));
}

TEST_CASE("replicates do not depend on the job count") {
  auto draw = [](std::size_t, RandomSource& rng) { return rng(); };
  const auto one = run_replicates<std::uint64_t>(50, 9, 1, draw);
  const auto four = run_replicates<std::uint64_t>(50, 9, 4, draw);
  CHECK(one == four);
  CHECK(one[3] == RandomSource(9).child(3)());

  const auto a = clt_samples(200, 300, 4, 1);
  const auto b = clt_samples(200, 300, 4, 3);
  CHECK(a.scaled_G == b.scaled_G);
  CHECK(a.scaled_theta == b.scaled_theta);
  CHECK(a.e_count == b.e_count);

  auto failing = [](std::size_t i, RandomSource&) -> int {
    if (i == 7) throw std::runtime_error("boom");
    return 0;
  };
  CHECK_THROWS_AS(run_replicates<int>(10, 1, 2, failing), std::runtime_error);
}

TEST_CASE("report bounds") {
  const auto r = make_report("x", 10, 5, 1, 0.3, 0.25, 0.2, 0.3);
  CHECK(r.pass);
  CHECK(r.tolerance == doctest::Approx(0.05));
  CHECK_FALSE(make_report("x", 10, 5, 1, 0.31, 0.25, 0.2, 0.3).pass);
}

TEST_CASE("clt experiment on a moderate size") {
  const auto reports = clt_experiment(2000, 3000, 21);
  REQUIRE(reports.size() == 6);
  for (const auto& r : reports) {
    CAPTURE(r.statistic);
    CAPTURE(r.observed);
    if (r.statistic == "var_scaled_theta") {
      // Centered diffusion value 3/4 - ln 2, not 3/4.
      CHECK(r.observed == doctest::Approx(0.75 - std::log(2.0)).epsilon(0.2));
      CHECK_FALSE(r.pass);
    } else {
      CHECK(r.pass);
    }
  }
}

TEST_CASE("fraction of E and tree ratios") {
  const auto e = e_fraction_experiment(500, 20000, 8);
  CHECK(e.pass);
  const auto ratios = tree_ratio_experiment(2000, 200, 8);
  REQUIRE(ratios.size() == 3);
  for (const auto& r : ratios) {
    CAPTURE(r.statistic);
    CHECK(std::abs(r.observed - r.target) < 0.01);
  }
}

TEST_CASE("symmetry by Monte Carlo") {
  const auto small = symmetry_experiment_mc(3, 20000, 2);
  CHECK(small.pass);
  const auto medium = symmetry_experiment_mc(50, 20000, 3);
  CHECK(medium.pass);
  SymmetryMcOptions control;
  control.control = true;
  CHECK(symmetry_experiment_mc(50, 20000, 3, 1, control).pass);
  // Shifting by E is what makes the laws agree; without it they differ.
  // For n = 3 the law of G is {1: 1/3, 2: 2/3}, that of n - G is {1: 2/3, 2: 1/3}.
  CHECK(small.observed < 0.02);
}
