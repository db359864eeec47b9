#include "cayley/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

namespace cayley::stats {

void EmpiricalDistribution::add(std::int64_t value, std::uint64_t times) {
  if (times == 0) return;
  counts_[value] += times;
  total_ += times;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  for (const auto& [value, c] : other.counts_) add(value, c);
}

std::uint64_t EmpiricalDistribution::count(std::int64_t value) const {
  const auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

std::map<std::int64_t, double> EmpiricalDistribution::probabilities() const {
  if (total_ == 0) throw std::logic_error("empty distribution");
  std::map<std::int64_t, double> out;
  for (const auto& [value, c] : counts_) out.emplace(value, static_cast<double>(c) / static_cast<double>(total_));
  return out;
}

double EmpiricalDistribution::mean() const {
  if (total_ == 0) throw std::logic_error("empty distribution");
  long double sum = 0;
  for (const auto& [value, c] : counts_) sum += static_cast<long double>(value) * c;
  return static_cast<double>(sum / total_);
}

double total_variation(const std::map<std::int64_t, double>& p, const std::map<std::int64_t, double>& q) {
  auto check = [](const std::map<std::int64_t, double>& d) {
    double sum = 0.0;
    for (const auto& [value, prob] : d) {
      if (prob < 0.0) throw std::invalid_argument("total_variation: negative probability");
      sum += prob;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("total_variation: distribution is not normalized");
  };
  check(p);
  check(q);
  std::map<std::int64_t, double> diff = p;
  for (const auto& [value, prob] : q) diff[value] -= prob;
  double distance = 0.0;
  for (const auto& [value, d] : diff) distance += std::abs(d);
  return std::min(1.0, distance / 2.0);
}

double total_variation(const EmpiricalDistribution& p, const EmpiricalDistribution& q) {
  return total_variation(p.probabilities(), q.probabilities());
}

double chi_square_survival(double statistic, std::size_t degrees_of_freedom) {
  if (degrees_of_freedom == 0) throw std::invalid_argument("chi-square needs at least one degree of freedom");
  if (statistic <= 0.0) return 1.0;
  const boost::math::chi_squared_distribution<double> law(static_cast<double>(degrees_of_freedom));
  return boost::math::cdf(boost::math::complement(law, statistic));
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need at least two categories");
  const auto total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  if (expected < 5.0) throw std::invalid_argument("chi_square_uniform: expected count per category below 5");
  double statistic = 0.0;
  for (const auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  const std::size_t dof = counts.size() - 1;
  return ChiSquareResult{statistic, dof, chi_square_survival(statistic, dof)};
}

double kolmogorov_survival(double statistic, std::size_t sample_size) {
  const double root = std::sqrt(static_cast<double>(sample_size));
  const double x = (root + 0.12 + 0.11 / root) * statistic;
  if (x < 1e-3) return 1.0;
  // Q_KS(x) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2)
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test_normal(std::vector<double> samples, double mean, double variance) {
  if (samples.empty()) throw std::invalid_argument("ks_test_normal: no samples");
  if (!(variance > 0.0)) throw std::invalid_argument("ks_test_normal: variance must be positive");
  std::sort(samples.begin(), samples.end());
  const boost::math::normal_distribution<double> law(mean, std::sqrt(variance));
  const auto count = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = boost::math::cdf(law, samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
  }
  return KsResult{d, kolmogorov_survival(d, samples.size())};
}

double sample_mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("sample_mean: no samples");
  long double sum = 0;
  for (const double x : xs) sum += x;
  return static_cast<double>(sum / static_cast<long double>(xs.size()));
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("sample_variance: need two samples");
  const double m = sample_mean(xs);
  long double sum = 0;
  for (const double x : xs) sum += static_cast<long double>(x - m) * (x - m);
  return static_cast<double>(sum / static_cast<long double>(xs.size() - 1));
}

}  // namespace cayley::stats
