#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cayley/random.hpp"

namespace cayley::stats {

/// One checked statistic of a Monte Carlo run.  pass <=> lower <= observed <= upper.
struct ExperimentReport {
  std::string statistic;
  std::size_t n = 0;
  std::size_t replicates = 0;
  std::uint64_t seed = kDefaultSeed;
  double observed = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

ExperimentReport make_report(std::string statistic, std::size_t n, std::size_t replicates, std::uint64_t seed,
                             double observed, double target, double lower, double upper);

/// Unique root of x e^x = 1.
double meir_moon_constant();

struct CltSamples {
  std::vector<double> scaled_G;      // sqrt(n) (G/n - 1/2)
  std::vector<double> scaled_theta;  // sqrt(n) (theta/n - ln 2)
  std::size_t e_count = 0;
};

/// Status-chain replicates used by clt_experiment.
CltSamples clt_samples(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs = 1);

/// Mean and variance of the rescaled G and theta, KS of G against N(0, 1/16)
/// and the fraction of runs with E = 1.
std::vector<ExperimentReport> clt_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                             unsigned jobs = 1);

/// Fraction of status-chain runs with E = 1, against 1/4 +- 0.02.
ExperimentReport e_fraction_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs = 1);

/// Mean G/n, M/n and maxIS/n over uniform trees, each against its limit +- 0.005.
std::vector<ExperimentReport> tree_ratio_experiment(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                                    unsigned jobs = 1);

struct SymmetryMcOptions {
  std::size_t bootstrap_rounds = 200;
  double quantile = 0.99;
  /// Compare G with an independent sample of G instead of (n-G)+E.
  bool control = false;
};

/// TV between the empirical law of G and that of (n-G)+E from independent
/// replicate sets, against a bootstrap quantile of the same statistic under
/// the pooled law.
ExperimentReport symmetry_experiment_mc(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs = 1,
                                        const SymmetryMcOptions& options = {});

}  // namespace cayley::stats
