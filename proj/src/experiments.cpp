#include "cayley/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cayley/greedy.hpp"
#include "cayley/parallel.hpp"
#include "cayley/stats.hpp"
#include "cayley/trees.hpp"

namespace cayley::stats {

ExperimentReport make_report(std::string statistic, std::size_t n, std::size_t replicates, std::uint64_t seed,
                             double observed, double target, double lower, double upper) {
  ExperimentReport r;
  r.statistic = std::move(statistic);
  r.n = n;
  r.replicates = replicates;
  r.seed = seed;
  r.observed = observed;
  r.target = target;
  r.lower = lower;
  r.upper = upper;
  r.tolerance = std::max(target - lower, upper - target);
  r.pass = lower <= observed && observed <= upper;
  return r;
}

double meir_moon_constant() {
  double x = 0.5;
  for (int i = 0; i < 50; ++i) x -= (x * std::exp(x) - 1.0) / (std::exp(x) * (1.0 + x));
  return x;
}

CltSamples clt_samples(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs) {
  const auto outcomes = run_replicates<GreedyOutcome>(
      replicates, seed, jobs, [n](std::size_t, RandomSource& rng) { return simulate_status_chain(n, rng); });
  CltSamples out;
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(nn);
  const double ln2 = std::log(2.0);
  // G is lattice valued; a uniform jitter on its cell makes the KS comparison
  // with a continuous law meaningful and leaves the limit unchanged.
  RandomSource jitter = RandomSource(seed).child(~std::uint64_t{0});
  out.scaled_G.reserve(replicates);
  out.scaled_theta.reserve(replicates);
  for (const auto& o : outcomes) {
    const double g = static_cast<double>(o.G) + jitter.uniform01() - 0.5;
    out.scaled_G.push_back(root * (g / nn - 0.5));
    out.scaled_theta.push_back(root * (static_cast<double>(o.theta) / nn - ln2));
    if (o.E) ++out.e_count;
  }
  return out;
}

std::vector<ExperimentReport> clt_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                             unsigned jobs) {
  if (n < 100 || replicates < 100) throw std::invalid_argument("clt_experiment: needs n >= 100 and replicates >= 100");
  const CltSamples samples = clt_samples(n, replicates, seed, jobs);
  const double reps = static_cast<double>(replicates);
  std::vector<ExperimentReport> reports;

  const double mean_g = sample_mean(samples.scaled_G);
  const double se_g = std::sqrt(1.0 / 16.0 / reps);
  reports.push_back(make_report("mean_scaled_G", n, replicates, seed, mean_g, 0.0, -4.0 * se_g, 4.0 * se_g));
  reports.push_back(make_report("var_scaled_G", n, replicates, seed, sample_variance(samples.scaled_G), 1.0 / 16.0,
                                0.055, 0.070));
  const auto ks = ks_test_normal(samples.scaled_G, 0.0, 1.0 / 16.0);
  reports.push_back(make_report("ks_pvalue_G", n, replicates, seed, ks.p_value, 1.0, 1e-2, 1.0));

  const double mean_theta = sample_mean(samples.scaled_theta);
  const double se_theta = std::sqrt(0.75 / reps);
  reports.push_back(
      make_report("mean_scaled_theta", n, replicates, seed, mean_theta, 0.0, -4.0 * se_theta, 4.0 * se_theta));
  reports.push_back(make_report("var_scaled_theta", n, replicates, seed, sample_variance(samples.scaled_theta), 0.75,
                                0.68, 0.83));

  const double fraction = static_cast<double>(samples.e_count) / reps;
  reports.push_back(make_report("fraction_E", n, replicates, seed, fraction, 0.25, 0.23, 0.27));
  return reports;
}

ExperimentReport e_fraction_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs) {
  if (replicates == 0) throw std::invalid_argument("e_fraction_experiment: replicates must be positive");
  const auto hits = run_replicates<std::uint8_t>(replicates, seed, jobs, [n](std::size_t, RandomSource& rng) {
    return static_cast<std::uint8_t>(simulate_status_chain(n, rng).E);
  });
  const auto count = std::count(hits.begin(), hits.end(), std::uint8_t{1});
  const double fraction = static_cast<double>(count) / static_cast<double>(replicates);
  return make_report("fraction_E", n, replicates, seed, fraction, 0.25, 0.23, 0.27);
}

std::vector<ExperimentReport> tree_ratio_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                                    unsigned jobs) {
  if (n < 2 || replicates == 0) throw std::invalid_argument("tree_ratio_experiment: needs n >= 2, replicates >= 1");
  struct Ratios {
    double greedy = 0, matching = 0, maximum = 0;
  };
  const auto rows = run_replicates<Ratios>(replicates, seed, jobs, [n](std::size_t, RandomSource& rng) {
    const CayleyTree tree = sample_uniform(n, rng);
    const auto edge_order = random_order(n - 1, rng);
    const double nn = static_cast<double>(n);
    return Ratios{static_cast<double>(greedy_peeling(tree).G) / nn,
                  static_cast<double>(greedy_matching(tree, edge_order)) / nn,
                  static_cast<double>(max_independent_set(tree)) / nn};
  });
  std::vector<double> greedy, matching, maximum;
  for (const auto& r : rows) {
    greedy.push_back(r.greedy);
    matching.push_back(r.matching);
    maximum.push_back(r.maximum);
  }
  const double rho = meir_moon_constant();
  return {make_report("mean_G_over_n", n, replicates, seed, sample_mean(greedy), 0.5, 0.495, 0.505),
          make_report("mean_M_over_n", n, replicates, seed, sample_mean(matching), 0.375, 0.370, 0.380),
          make_report("mean_maxIS_over_n", n, replicates, seed, sample_mean(maximum), rho, rho - 0.005, rho + 0.005)};
}

namespace {

// Multinomial draw of `size` observations from `law` by conditional binomials.
EmpiricalDistribution resample(const std::vector<std::pair<std::int64_t, double>>& law, std::uint64_t size,
                               RandomSource& rng) {
  EmpiricalDistribution out;
  std::uint64_t left = size;
  double mass_left = 1.0;
  for (std::size_t i = 0; i < law.size() && left > 0; ++i) {
    const auto& [value, p] = law[i];
    std::uint64_t drawn = left;
    if (i + 1 < law.size()) {
      const double q = std::clamp(p / mass_left, 0.0, 1.0);
      std::binomial_distribution<std::uint64_t> binomial(left, q);
      drawn = binomial(rng);
    }
    out.add(value, drawn);
    left -= drawn;
    mass_left -= p;
  }
  return out;
}

}  // namespace

ExperimentReport symmetry_experiment_mc(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs,
                                        const SymmetryMcOptions& options) {
  if (replicates == 0) throw std::invalid_argument("symmetry_experiment_mc: replicates must be positive");
  if (options.bootstrap_rounds == 0) throw std::invalid_argument("symmetry_experiment_mc: need bootstrap rounds");
  // Replicates [0, R) feed G, [R, 2R) feed the other side.
  const auto outcomes = run_replicates<GreedyOutcome>(
      2 * replicates, seed, jobs, [n](std::size_t, RandomSource& rng) { return simulate_status_chain(n, rng); });
  EmpiricalDistribution first, second;
  for (std::size_t r = 0; r < replicates; ++r) first.add(static_cast<std::int64_t>(outcomes[r].G));
  for (std::size_t r = replicates; r < 2 * replicates; ++r) {
    const auto& o = outcomes[r];
    const auto value = options.control ? static_cast<std::int64_t>(o.G)
                                       : static_cast<std::int64_t>(n - o.G + (o.E ? 1 : 0));
    second.add(value);
  }
  const double observed = total_variation(first, second);

  EmpiricalDistribution pooled = first;
  pooled.merge(second);
  std::vector<std::pair<std::int64_t, double>> law;
  for (const auto& [value, p] : pooled.probabilities()) law.emplace_back(value, p);

  RandomSource rng = RandomSource(seed).child(~std::uint64_t{0} - 1);
  std::vector<double> null_tv;
  null_tv.reserve(options.bootstrap_rounds);
  for (std::size_t b = 0; b < options.bootstrap_rounds; ++b) {
    const auto x = resample(law, replicates, rng);
    const auto y = resample(law, replicates, rng);
    null_tv.push_back(total_variation(x, y));
  }
  std::sort(null_tv.begin(), null_tv.end());
  const auto index = std::min(null_tv.size() - 1,
                              static_cast<std::size_t>(std::ceil(options.quantile * static_cast<double>(null_tv.size()))) - 1);
  const double threshold = null_tv[index];
  return make_report(options.control ? "tv_G_vs_G" : "tv_G_vs_complement", n, replicates, seed, observed, 0.0, 0.0,
                     threshold);
}

}  // namespace cayley::stats
