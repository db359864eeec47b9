#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cayley/peeling.hpp"
#include "cayley/random.hpp"
#include "cayley/trees.hpp"

namespace cayley {

enum class VertexStatus : std::uint8_t { undetermined, active, blocked };

/// Status counts (U, A^w, B^w, A^b, B^b) of the greedy peeling chain.
struct StatusChainState {
  std::int64_t undetermined = 0;
  std::int64_t active_white = 0;
  std::int64_t blocked_white = 0;
  std::int64_t active_blue = 0;
  std::int64_t blocked_blue = 0;

  [[nodiscard]] std::int64_t total() const noexcept {
    return undetermined + active_white + blocked_white + active_blue + blocked_blue;
  }
  [[nodiscard]] std::int64_t active() const noexcept { return active_white + active_blue; }
  [[nodiscard]] std::int64_t blocked() const noexcept { return blocked_white + blocked_blue; }

  static StatusChainState initial(std::size_t n) noexcept {
    return StatusChainState{static_cast<std::int64_t>(n), 0, 0, 0, 0};
  }

  friend bool operator==(const StatusChainState&, const StatusChainState&) = default;
};

/// One column of the transition table: the state moves by `delta` with
/// probability numerator / denominator.
struct ChainTransition {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  StatusChainState delta;
  /// The root n turns active with no peeling step (only undetermined vertex was n).
  bool root_only = false;
};

struct TransitionTable {
  std::array<ChainTransition, 5> columns{};
  std::size_t size = 0;

  [[nodiscard]] auto begin() const noexcept { return columns.begin(); }
  [[nodiscard]] auto end() const noexcept { return columns.begin() + static_cast<std::ptrdiff_t>(size); }
};

/// The transition columns available from s (U >= 1).  Zero-probability
/// columns are omitted; numerators always sum to the shared denominator.
/// Throws std::invalid_argument for states violating the chain invariants.
TransitionTable chain_transitions(const StatusChainState& s, std::size_t n);

struct GreedyOutcome {
  std::size_t G = 0;
  std::size_t theta = 0;
  bool E = false;
  /// Only filled by tree-backed runs, sorted.
  std::vector<Vertex> active_set;
};

/// Greedy maximal independent set inspecting vertices in `order`.
std::vector<Vertex> greedy_reference(const CayleyTree& tree, std::span<const Vertex> order);

/// Greedy construction along the peeling exploration with the greedy rule.
/// When `trace` is given, the peeling steps are appended to it.
GreedyOutcome greedy_peeling(const CayleyTree& tree, std::vector<PeelStep>* trace = nullptr);

StatusChainState status_chain_step(const StatusChainState& s, std::size_t n, RandomSource& rng);

/// Runs the status chain from (n,0,0,0,0) until U = 0 without building a tree.
GreedyOutcome simulate_status_chain(std::size_t n, RandomSource& rng);

/// Exact law of (G, E) and optionally theta, as numbers of Cayley trees.
struct ChainLaw {
  struct Key {
    std::size_t G = 0;
    bool E = false;
    std::size_t theta = 0;  // 0 when theta was not tracked
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  std::size_t n = 1;
  bool tracks_theta = false;
  /// Number of Cayley trees per outcome; the counts add up to n^(n-2).
  std::map<Key, mpz_class> tree_counts;

  [[nodiscard]] mpz_class total() const;
  [[nodiscard]] mpq_class probability(const Key& key) const;
  [[nodiscard]] std::map<std::size_t, mpq_class> law_of_G() const;
  /// Law of (n - G) + E.
  [[nodiscard]] std::map<std::size_t, mpq_class> law_of_complement() const;
  [[nodiscard]] mpq_class prob_E() const;
};

/// Default cap of exact_chain_law (60, or CAYLEY_GREEDY_CAP).
std::size_t chain_law_cap();

/// Forward DP over the status chain in exact integer arithmetic.
ChainLaw exact_chain_law(std::size_t n, bool track_theta = false);

/// The same law by running greedy_peeling on each of the n^(n-2) trees.
ChainLaw enumerated_chain_law(std::size_t n);

mpq_class total_variation_exact(const std::map<std::size_t, mpq_class>& p,
                                const std::map<std::size_t, mpq_class>& q);

struct SymmetryCheck {
  mpq_class tv;
  mpq_class prob_E;
  /// Whether the DP law was also compared with full enumeration.
  bool cross_checked = false;
};

/// TV(law(G), law((n-G)+E)) and P(E=1), exactly.  For n within the
/// enumeration cap (and <= 8 by default) the DP is cross-checked against
/// enumeration; a mismatch throws std::logic_error.
SymmetryCheck verify_symmetry_exact(std::size_t n, std::size_t cross_check_limit = 8);

struct ProbE {
  mpq_class exact;
  /// E[(1 - 2/n)^(theta - 1)] under the exact law of theta.
  mpq_class theta_moment;
};

ProbE prob_E(std::size_t n);

/// Greedy maximal matching; edge v is (v, parent(v)), `edge_order` is a
/// permutation of {1..n-1}.
std::size_t greedy_matching(const CayleyTree& tree, std::span<const Vertex> edge_order);

/// Maximum independent set size (two-state tree DP).
std::size_t max_independent_set(const CayleyTree& tree);

/// Uniform permutation of {1..count}.
std::vector<Vertex> random_order(std::size_t count, RandomSource& rng);

}  // namespace cayley
