#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cayley::stats {

/// Counts of integer-valued observations.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  template <typename Range>
  explicit EmpiricalDistribution(const Range& values) {
    for (const auto v : values) add(static_cast<std::int64_t>(v));
  }

  void add(std::int64_t value, std::uint64_t times = 1);
  void merge(const EmpiricalDistribution& other);

  [[nodiscard]] std::uint64_t count(std::int64_t value) const;
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
  [[nodiscard]] const std::map<std::int64_t, std::uint64_t>& counts() const noexcept { return counts_; }
  [[nodiscard]] std::map<std::int64_t, double> probabilities() const;
  [[nodiscard]] double mean() const;

 private:
  std::map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// (1/2) sum |p - q|.  Both inputs must sum to 1 within 1e-9.
double total_variation(const std::map<std::int64_t, double>& p, const std::map<std::int64_t, double>& q);
double total_variation(const EmpiricalDistribution& p, const EmpiricalDistribution& q);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit against the uniform law on counts.size() categories.
/// Throws std::invalid_argument if fewer than 2 categories or an expected
/// count below 5.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

/// Upper tail of the chi-square law.
double chi_square_survival(double statistic, std::size_t degrees_of_freedom);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov test against N(mean, variance).
KsResult ks_test_normal(std::vector<double> samples, double mean, double variance);

/// P(D_N > statistic) from the asymptotic Kolmogorov tail with the Stephens
/// correction applied to sqrt(N).
double kolmogorov_survival(double statistic, std::size_t sample_size);

double sample_mean(std::span<const double> xs);
/// Unbiased sample variance.
double sample_variance(std::span<const double> xs);

}  // namespace cayley::stats
