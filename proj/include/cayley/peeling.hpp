#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cayley/detail/disjoint_sets.hpp"
#include "cayley/random.hpp"
#include "cayley/trees.hpp"

namespace cayley {

enum class Color : std::uint8_t { white, blue };

struct PeelStep {
  Vertex peeled = kNoVertex;
  Vertex parent = kNoVertex;
  bool recolored_to_blue = false;

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// Colored rooted forest on {1..n}: one blue component (the one holding n)
/// plus white trees.  Starts as n isolated vertices with only n blue.
///
/// Union-find with per-component tree root, size and color.  White roots and
/// white/blue vertex lists are kept explicitly so that samplers can draw from
/// them in O(1).
class ForestState {
 public:
  explicit ForestState(std::size_t n);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] std::size_t blue_size() const noexcept { return blue_vertices_.size(); }
  [[nodiscard]] std::size_t component_count() const noexcept { return n_ - edge_count_; }
  [[nodiscard]] bool complete() const noexcept { return edge_count_ + 1 == n_; }

  [[nodiscard]] Color color(Vertex v) const { return color_[rep(v)]; }
  /// Root of the tree containing v.
  [[nodiscard]] Vertex component_root(Vertex v) const { return root_[rep(v)]; }
  [[nodiscard]] std::size_t component_size(Vertex v) const { return sets_.size_of(v); }
  [[nodiscard]] bool same_component(Vertex a, Vertex b) const { return rep(a) == rep(b); }
  [[nodiscard]] bool is_white_root(Vertex v) const;
  /// Parent of v among the edges added so far, kNoVertex if none yet.
  [[nodiscard]] Vertex parent(Vertex v) const { return parent_.at(v); }

  [[nodiscard]] std::span<const Vertex> white_roots() const noexcept { return white_roots_; }
  [[nodiscard]] std::span<const Vertex> white_vertices() const noexcept { return white_vertices_; }
  [[nodiscard]] std::span<const Vertex> blue_vertices() const noexcept { return blue_vertices_; }
  /// Smallest white label, kNoVertex when everything is blue.
  [[nodiscard]] Vertex smallest_white() const;
  /// Vertices of the component holding v.
  [[nodiscard]] std::vector<Vertex> members(Vertex v) const;

  /// Adds the edge v1 -> v2; the merged component takes v2's color.
  /// Throws std::invalid_argument unless v1 is a white root and v2 lies in
  /// another component.
  PeelStep attach(Vertex v1, Vertex v2);

  /// The finished tree; requires complete().
  [[nodiscard]] CayleyTree to_tree() const;

 private:
  [[nodiscard]] std::uint32_t rep(Vertex v) const;
  void drop_white_root(Vertex v);

  std::size_t n_;
  std::size_t edge_count_ = 0;
  detail::DisjointSets sets_;
  std::vector<Vertex> root_;   // by representative
  std::vector<Color> color_;   // by representative
  std::vector<Vertex> next_;   // circular member lists
  std::vector<Vertex> parent_;
  std::vector<Vertex> white_roots_;
  std::vector<std::size_t> white_root_pos_;
  std::vector<Vertex> white_vertices_;
  std::vector<std::size_t> white_pos_;
  std::vector<Vertex> blue_vertices_;
  mutable Vertex smallest_white_cursor_ = 1;
};

/// Selection rule: returns a white root of the given (incomplete) forest, or
/// kNoVertex to end the exploration early.
using PeelingAlgorithm = std::function<Vertex(const ForestState&)>;

/// Uniform white root; the rule owns its own stream, fixed before the run.
PeelingAlgorithm unif_algorithm(RandomSource rng);
/// Root of the tree holding the smallest white label.
PeelingAlgorithm ab_algorithm();
/// Smallest undetermined vertex of the greedy construction.  Before the greedy
/// stopping time these are exactly the white singletons; returns kNoVertex once
/// none is left (the exploration is not continued past that point).
PeelingAlgorithm greedy_algorithm();

/// N(f) = l * n^(n-k-2): rooted Cayley trees (rooted at n) containing f.
mpz_class count_containing_trees(const ForestState& state);

/// Peeling exploration of a fixed tree rooted at n.
std::vector<PeelStep> peel_fixed_tree(const CayleyTree& tree, const PeelingAlgorithm& alg);

struct PeelRun {
  std::vector<PeelStep> steps;
  /// Set when the exploration ran to the full tree.
  std::optional<CayleyTree> tree;
};

/// The exploration of a uniform tree sampled on the fly: each peeled vertex
/// goes to a given blue vertex w.p. (l+m)/(l n) and to a given compatible
/// white vertex w.p. 1/n.
PeelRun peel_markov(std::size_t n, const PeelingAlgorithm& alg, RandomSource& rng);

/// min{i : vertex 1 is blue in F_i} under the AB rule, sampled via peel_markov.
std::size_t first_branch_length(std::size_t n, RandomSource& rng);

/// Exact law of first_branch_length: entry k (1 <= k <= n-1) is
/// ((k+1)/n) prod_{i=2}^{k} (1 - i/n).
std::vector<double> first_branch_law(std::size_t n);

}  // namespace cayley
