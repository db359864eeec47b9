#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cayley/random.hpp"

namespace cayley {

/// Vertex labels are 1-based; 0 means "no vertex".
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

/// Labeled tree on {1..n} stored rooted at vertex n as a parent map.
///
/// Immutable after construction; the constructor rejects anything that is not
/// a tree rooted at n.
class CayleyTree {
 public:
  /// `parents[i]` is the parent of vertex i+1, for i in [0, n-1).
  CayleyTree(std::size_t n, std::vector<Vertex> parents);

  /// Single vertex tree.
  CayleyTree() : CayleyTree(1, {}) {}

  /// Builds the tree with the given undirected edges, rooted at n.
  static CayleyTree from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] Vertex root() const noexcept { return static_cast<Vertex>(n_); }
  /// Parent of v in the tree rooted at n; kNoVertex for the root.
  [[nodiscard]] Vertex parent(Vertex v) const { return parent_.at(v); }
  /// Parents of 1..n-1, in label order.
  [[nodiscard]] std::span<const Vertex> parents() const noexcept {
    return std::span<const Vertex>(parent_).subspan(1, n_ - 1);
  }
  /// Edges (v, parent(v)) for v = 1..n-1.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// Neighbour lists indexed by label (index 0 unused).
  [[nodiscard]] std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const CayleyTree&, const CayleyTree&) = default;

 private:
  std::size_t n_;
  std::vector<Vertex> parent_;  // size n+1, parent_[0] and parent_[n] are kNoVertex
};

/// Tree with an arbitrary root, as produced by Pitman's coalescent.
struct RootedTree {
  std::size_t n = 1;
  Vertex root = 1;
  std::vector<Vertex> parent;  // size n+1, parent[root] == kNoVertex

  /// Same shape with labels `root` and n swapped, so the result is rooted at n.
  [[nodiscard]] CayleyTree relabeled_to_root_n() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

struct PruferSequence {
  std::size_t n = 2;
  std::vector<Vertex> symbols;  // length n-2, entries in {1..n}

  friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

CayleyTree prufer_decode(const PruferSequence& seq);
PruferSequence prufer_encode(const CayleyTree& tree);

/// Uniform Cayley tree (i.i.d. uniform Prüfer symbols), rooted at n.
CayleyTree sample_uniform(std::size_t n, RandomSource& rng);

/// Pitman's coalescent: uniform over the n^(n-1) rooted labeled trees.
RootedTree pitman_sample(std::size_t n, RandomSource& rng);

/// Aldous-Broder walk on the complete graph with loops, started at n.
CayleyTree aldous_broder_sample(std::size_t n, RandomSource& rng);

/// First repetition time of the same walk: min{i >= 1 : X_i in {X_0..X_{i-1}}}.
std::size_t aldous_broder_first_repetition(std::size_t n, RandomSource& rng);

/// P(first repetition = k) for k = 0..n (entry 0 is zero):
/// 1/n at k = 1 and (k/n) prod_{i=1}^{k-1} (1 - i/n) for k >= 2.
std::vector<double> aldous_broder_repetition_law(std::size_t n);

/// Upper bound on n accepted by exhaustive enumeration (9, or CAYLEY_GREEDY_CAP).
std::size_t enumeration_cap();

/// Calls fn for each of the n^(n-2) Cayley trees, in lexicographic Prüfer order.
void for_each_cayley_tree(std::size_t n, const std::function<void(const CayleyTree&)>& fn);

/// Materialized form of for_each_cayley_tree; n is limited to 7.
std::vector<CayleyTree> enumerate_all(std::size_t n);

/// Index in [0, n^(n-2)) of a tree in Prüfer order.
std::uint64_t tree_index(const CayleyTree& tree);

}  // namespace cayley
