// Exact law of the greedy status chain.
//
// Probabilities are carried as integers D(s) = P(s) * n^(n-1) / l(s), where
// l(s) is the number of blue vertices.  Every transition then multiplies D by
// a small integer and divides exactly by n, and a terminal state accounts for
// D * l / n Cayley trees.  No rational normalization happens inside the DP.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/detail/caps.hpp"
#include "cayley/greedy.hpp"

namespace cayley {

namespace {

constexpr std::size_t kDefaultChainLawCap = 60;

struct PackedState {
  // (A^w, A^b, B^b, theta); U is the bucket index and B^w is implied.
  static std::uint64_t pack(std::int64_t aw, std::int64_t ab, std::int64_t bb, std::size_t theta) {
    return (static_cast<std::uint64_t>(aw) << 48) | (static_cast<std::uint64_t>(ab) << 32) |
           (static_cast<std::uint64_t>(bb) << 16) | static_cast<std::uint64_t>(theta);
  }
  static std::int64_t aw(std::uint64_t key) { return static_cast<std::int64_t>(key >> 48); }
  static std::int64_t ab(std::uint64_t key) { return static_cast<std::int64_t>((key >> 32) & 0xFFFF); }
  static std::int64_t bb(std::uint64_t key) { return static_cast<std::int64_t>((key >> 16) & 0xFFFF); }
  static std::size_t theta(std::uint64_t key) { return static_cast<std::size_t>(key & 0xFFFF); }
};

std::int64_t blue_count(const StatusChainState& s) {
  return std::max<std::int64_t>(1, s.active_blue + s.blocked_blue);
}

mpz_class power(std::size_t base, std::size_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::map<std::size_t, mpq_class> to_probabilities(const std::map<std::size_t, mpz_class>& counts,
                                                  const mpz_class& total) {
  std::map<std::size_t, mpq_class> out;
  for (const auto& [value, count] : counts) {
    mpq_class p(count, total);
    p.canonicalize();
    out.emplace(value, p);
  }
  return out;
}

}  // namespace

mpz_class ChainLaw::total() const { return n <= 2 ? mpz_class(1) : power(n, n - 2); }

mpq_class ChainLaw::probability(const Key& key) const {
  const auto it = tree_counts.find(key);
  if (it == tree_counts.end()) return 0;
  mpq_class p(it->second, total());
  p.canonicalize();
  return p;
}

std::map<std::size_t, mpq_class> ChainLaw::law_of_G() const {
  std::map<std::size_t, mpz_class> counts;
  for (const auto& [key, count] : tree_counts) counts[key.G] += count;
  return to_probabilities(counts, total());
}

std::map<std::size_t, mpq_class> ChainLaw::law_of_complement() const {
  std::map<std::size_t, mpz_class> counts;
  for (const auto& [key, count] : tree_counts) counts[n - key.G + (key.E ? 1 : 0)] += count;
  return to_probabilities(counts, total());
}

mpq_class ChainLaw::prob_E() const {
  mpz_class hits = 0;
  for (const auto& [key, count] : tree_counts) {
    if (key.E) hits += count;
  }
  mpq_class p(hits, total());
  p.canonicalize();
  return p;
}

std::size_t chain_law_cap() { return detail::cap_from_env(kDefaultChainLawCap); }

ChainLaw exact_chain_law(std::size_t n, bool track_theta) {
  if (n < 1) throw std::invalid_argument("exact_chain_law: n must be >= 1");
  if (n > chain_law_cap()) {
    throw std::invalid_argument("exact_chain_law: n = " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(chain_law_cap()));
  }
  if (n >= 0xFFFF) throw std::invalid_argument("exact_chain_law: n too large for the state encoding");

  const auto nn = static_cast<std::int64_t>(n);
  std::vector<std::unordered_map<std::uint64_t, mpz_class>> buckets(n + 1);
  buckets[n].emplace(PackedState::pack(0, 0, 0, 0), power(n, n - 1));

  mpz_class scaled;
  for (std::size_t u = n; u >= 1; --u) {
    for (const auto& [key, weight] : buckets[u]) {
      const StatusChainState s{static_cast<std::int64_t>(u), PackedState::aw(key),
                               nn - static_cast<std::int64_t>(u) - PackedState::aw(key) - PackedState::ab(key) -
                                   PackedState::bb(key),
                               PackedState::ab(key), PackedState::bb(key)};
      const std::size_t theta = PackedState::theta(key);
      for (const auto& column : chain_transitions(s, n)) {
        const StatusChainState next{s.undetermined + column.delta.undetermined,
                                    s.active_white + column.delta.active_white,
                                    s.blocked_white + column.delta.blocked_white,
                                    s.active_blue + column.delta.active_blue,
                                    s.blocked_blue + column.delta.blocked_blue};
        // D' = D * num * l / (den * l')
        const auto multiplier = static_cast<unsigned long>(column.numerator * blue_count(s));
        const auto divisor = static_cast<unsigned long>(column.denominator * blue_count(next));
        mpz_mul_ui(scaled.get_mpz_t(), weight.get_mpz_t(), multiplier);
        if (!mpz_divisible_ui_p(scaled.get_mpz_t(), divisor)) {
          throw std::logic_error("exact_chain_law: non-integral intermediate weight");
        }
        mpz_divexact_ui(scaled.get_mpz_t(), scaled.get_mpz_t(), divisor);
        const auto next_key = PackedState::pack(next.active_white, next.active_blue, next.blocked_blue,
                                                track_theta ? theta + 1 : 0);
        buckets[static_cast<std::size_t>(next.undetermined)][next_key] += scaled;
      }
    }
    buckets[u].clear();
    buckets[u].rehash(0);
  }

  ChainLaw law;
  law.n = n;
  law.tracks_theta = track_theta;
  mpz_class sum = 0;
  for (const auto& [key, weight] : buckets[0]) {
    const std::int64_t ab = PackedState::ab(key);
    const std::int64_t bb = PackedState::bb(key);
    mpz_class count = weight * static_cast<unsigned long>(std::max<std::int64_t>(1, ab + bb));
    if (!mpz_divisible_ui_p(count.get_mpz_t(), n)) throw std::logic_error("exact_chain_law: non-integral tree count");
    mpz_divexact_ui(count.get_mpz_t(), count.get_mpz_t(), n);
    // The root-only final step is the only way to end with A^b = 1, B^b = 0.
    const ChainLaw::Key out_key{static_cast<std::size_t>(PackedState::aw(key) + ab), bb == 0,
                                PackedState::theta(key)};
    law.tree_counts[out_key] += count;
    sum += count;
  }
  if (sum != law.total()) throw std::logic_error("exact_chain_law: probabilities do not sum to one");
  return law;
}

ChainLaw enumerated_chain_law(std::size_t n) {
  ChainLaw law;
  law.n = n;
  law.tracks_theta = true;
  for_each_cayley_tree(n, [&](const CayleyTree& tree) {
    const auto outcome = greedy_peeling(tree);
    law.tree_counts[ChainLaw::Key{outcome.G, outcome.E, outcome.theta}] += 1;
  });
  return law;
}

mpq_class total_variation_exact(const std::map<std::size_t, mpq_class>& p,
                                const std::map<std::size_t, mpq_class>& q) {
  mpq_class sum_p = 0, sum_q = 0, distance = 0;
  std::map<std::size_t, mpq_class> diff;
  for (const auto& [value, prob] : p) {
    if (prob < 0) throw std::invalid_argument("total_variation: negative probability");
    sum_p += prob;
    diff[value] += prob;
  }
  for (const auto& [value, prob] : q) {
    if (prob < 0) throw std::invalid_argument("total_variation: negative probability");
    sum_q += prob;
    diff[value] -= prob;
  }
  if (sum_p != 1 || sum_q != 1) throw std::invalid_argument("total_variation: distributions are not normalized");
  for (const auto& [value, d] : diff) distance += abs(d);
  distance /= 2;
  return distance;
}

SymmetryCheck verify_symmetry_exact(std::size_t n, std::size_t cross_check_limit) {
  SymmetryCheck check;
  const bool cross = n <= cross_check_limit && n <= enumeration_cap();
  const ChainLaw law = exact_chain_law(n, cross);
  if (cross) {
    if (enumerated_chain_law(n).tree_counts != law.tree_counts) {
      throw std::logic_error("exact_chain_law disagrees with enumeration at n = " + std::to_string(n));
    }
    check.cross_checked = true;
  }
  check.tv = total_variation_exact(law.law_of_G(), law.law_of_complement());
  check.prob_E = law.prob_E();
  return check;
}

ProbE prob_E(std::size_t n) {
  const ChainLaw law = exact_chain_law(n, true);
  ProbE out;
  out.exact = law.prob_E();
  mpq_class ratio(static_cast<long>(n) - 2, static_cast<long>(n));
  ratio.canonicalize();
  std::map<std::size_t, mpz_class> by_theta;
  for (const auto& [key, count] : law.tree_counts) by_theta[key.theta] += count;
  out.theta_moment = 0;
  for (const auto& [theta, count] : by_theta) {
    mpq_class term(count, law.total());
    mpq_class factor = 1;
    for (std::size_t i = 1; i < theta; ++i) factor *= ratio;
    out.theta_moment += term * factor;
  }
  out.theta_moment.canonicalize();
  return out;
}

}  // namespace cayley
