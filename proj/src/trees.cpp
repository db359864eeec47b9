#include "cayley/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cayley/detail/caps.hpp"
#include "cayley/detail/disjoint_sets.hpp"

namespace cayley {

namespace {

constexpr std::size_t kDefaultEnumerationCap = 9;

std::vector<Vertex> root_at_n(std::size_t n, const std::vector<std::vector<Vertex>>& adjacency) {
  std::vector<Vertex> parent(n + 1, kNoVertex);
  std::vector<bool> seen(n + 1, false);
  std::vector<Vertex> stack{static_cast<Vertex>(n)};
  seen[n] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Vertex y : adjacency[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      ++reached;
      stack.push_back(y);
    }
  }
  if (reached != n) throw std::invalid_argument("edge set is not a spanning tree");
  return parent;
}

}  // namespace

CayleyTree::CayleyTree(std::size_t n, std::vector<Vertex> parents) : n_(n) {
  if (n == 0) throw std::invalid_argument("a Cayley tree needs at least one vertex");
  if (parents.size() != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " parents, got " +
                                std::to_string(parents.size()));
  }
  parent_.assign(n + 1, kNoVertex);
  for (std::size_t v = 1; v < n; ++v) {
    const Vertex p = parents[v - 1];
    if (p < 1 || p > n) throw std::invalid_argument("parent label out of range");
    if (p == v) throw std::invalid_argument("vertex cannot be its own parent");
    parent_[v] = p;
  }
  // Every vertex must reach n; mark vertices known to reach it to stay linear.
  std::vector<std::uint8_t> state(n + 1, 0);  // 0 unknown, 1 on current path, 2 reaches root
  state[n] = 2;
  std::vector<Vertex> path;
  for (Vertex v = 1; v < n; ++v) {
    Vertex x = v;
    path.clear();
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = parent_[x];
    }
    if (state[x] == 1) throw std::invalid_argument("parent map contains a cycle");
    for (const Vertex y : path) state[y] = 2;
  }
}

CayleyTree CayleyTree::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n == 0) throw std::invalid_argument("a Cayley tree needs at least one vertex");
  if (edges.size() != n - 1) throw std::invalid_argument("a tree on n vertices has n-1 edges");
  std::vector<std::vector<Vertex>> adjacency(n + 1);
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw std::invalid_argument("bad edge");
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  auto parent = root_at_n(n, adjacency);
  return CayleyTree(n, std::vector<Vertex>(parent.begin() + 1, parent.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::vector<std::pair<Vertex, Vertex>> CayleyTree::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(n_ - 1);
  for (Vertex v = 1; v < n_; ++v) out.emplace_back(v, parent_[v]);
  return out;
}

std::vector<std::vector<Vertex>> CayleyTree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_ + 1);
  for (Vertex v = 1; v < n_; ++v) {
    adj[v].push_back(parent_[v]);
    adj[parent_[v]].push_back(v);
  }
  return adj;
}

CayleyTree RootedTree::relabeled_to_root_n() const {
  const auto last = static_cast<Vertex>(n);
  auto swap_label = [&](Vertex v) { return v == root ? last : (v == last ? root : v); };
  std::vector<Vertex> relabeled(n + 1, kNoVertex);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == root) continue;
    relabeled[swap_label(v)] = swap_label(parent[v]);
  }
  return CayleyTree(n, std::vector<Vertex>(relabeled.begin() + 1, relabeled.begin() + static_cast<std::ptrdiff_t>(n)));
}

CayleyTree prufer_decode(const PruferSequence& seq) {
  const std::size_t n = seq.n;
  if (n < 2) throw std::invalid_argument("Prüfer sequences need n >= 2");
  if (seq.symbols.size() != n - 2) throw std::invalid_argument("Prüfer sequence must have length n-2");
  std::vector<std::uint32_t> degree(n + 1, 1);
  degree[0] = 0;
  for (const Vertex s : seq.symbols) {
    if (s < 1 || s > n) throw std::invalid_argument("Prüfer symbol out of range");
    ++degree[s];
  }

  std::vector<std::vector<Vertex>> adjacency(n + 1);
  auto link = [&](Vertex a, Vertex b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  };

  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (const Vertex s : seq.symbols) {
    link(leaf, s);
    degree[leaf] = 0;
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  link(leaf, static_cast<Vertex>(n));

  auto parent = root_at_n(n, adjacency);
  return CayleyTree(n, std::vector<Vertex>(parent.begin() + 1, parent.begin() + static_cast<std::ptrdiff_t>(n)));
}

PruferSequence prufer_encode(const CayleyTree& tree) {
  const std::size_t n = tree.size();
  if (n < 2) throw std::invalid_argument("Prüfer encoding needs n >= 2");
  std::vector<std::uint32_t> degree(n + 1, 0);
  for (Vertex v = 1; v < n; ++v) {
    ++degree[v];
    ++degree[tree.parent(v)];
  }
  PruferSequence seq{n, {}};
  seq.symbols.reserve(n - 2);
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    // Leaves removed here are never n, so their only neighbour is the parent.
    const Vertex next = tree.parent(leaf);
    seq.symbols.push_back(next);
    degree[leaf] = 0;
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  return seq;
}

CayleyTree sample_uniform(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return CayleyTree();
  PruferSequence seq{n, std::vector<Vertex>(n - 2)};
  for (auto& s : seq.symbols) s = static_cast<Vertex>(rng.uniform_int(1, n));
  return prufer_decode(seq);
}

RootedTree pitman_sample(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  RootedTree out{n, 1, std::vector<Vertex>(n + 1, kNoVertex)};
  detail::DisjointSets components(n + 1);
  // Tree root of each component, stored at its representative.
  std::vector<Vertex> tree_root(n + 1);
  for (Vertex v = 0; v <= n; ++v) tree_root[v] = v;
  std::vector<Vertex> roots(n);
  std::vector<std::size_t> root_pos(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    roots[v - 1] = v;
    root_pos[v] = v - 1;
  }

  for (std::size_t k = 1; k < n; ++k) {
    const auto target = static_cast<Vertex>(rng.uniform_int(1, n));
    const Vertex own_root = tree_root[components.find(target)];
    // Uniform among the n-k roots other than own_root; acceptance >= 1/2.
    Vertex chosen;
    do {
      chosen = roots[rng.uniform_below(roots.size())];
    } while (chosen == own_root);

    out.parent[chosen] = target;
    const std::size_t pos = root_pos[chosen];
    roots[pos] = roots.back();
    root_pos[roots[pos]] = pos;
    roots.pop_back();
    const Vertex rep = components.unite(chosen, target);
    tree_root[rep] = own_root;
  }
  out.root = roots.front();
  return out;
}

CayleyTree aldous_broder_sample(std::size_t n, RandomSource& rng) {
  if (n < 2) throw std::invalid_argument("Aldous-Broder needs n >= 2");
  std::vector<Vertex> parent(n + 1, kNoVertex);
  std::vector<bool> visited(n + 1, false);
  auto current = static_cast<Vertex>(n);
  visited[n] = true;
  std::size_t discovered = 1;
  while (discovered < n) {
    const auto next = static_cast<Vertex>(rng.uniform_int(1, n));
    if (!visited[next]) {
      visited[next] = true;
      parent[next] = current;
      ++discovered;
    }
    current = next;
  }
  return CayleyTree(n, std::vector<Vertex>(parent.begin() + 1, parent.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::size_t aldous_broder_first_repetition(std::size_t n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<bool> visited(n + 1, false);
  visited[n] = true;
  for (std::size_t i = 1;; ++i) {
    const auto x = static_cast<Vertex>(rng.uniform_int(1, n));
    if (visited[x]) return i;
    visited[x] = true;
  }
}

std::vector<double> aldous_broder_repetition_law(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto nn = static_cast<double>(n);
  std::vector<double> law(n + 1, 0.0);
  double survive = 1.0;  // prod_{i=1}^{k-1} (1 - i/n)
  for (std::size_t k = 1; k <= n; ++k) {
    law[k] = static_cast<double>(k) / nn * survive;
    survive *= 1.0 - static_cast<double>(k) / nn;
  }
  return law;
}

std::size_t enumeration_cap() { return detail::cap_from_env(kDefaultEnumerationCap); }

void for_each_cayley_tree(std::size_t n, const std::function<void(const CayleyTree&)>& fn) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > enumeration_cap()) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(enumeration_cap()));
  }
  if (n == 1) {
    fn(CayleyTree());
    return;
  }
  PruferSequence seq{n, std::vector<Vertex>(n - 2, 1)};
  while (true) {
    fn(prufer_decode(seq));
    std::size_t i = seq.symbols.size();
    while (i > 0 && seq.symbols[i - 1] == n) {
      seq.symbols[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
    ++seq.symbols[i - 1];
  }
}

std::vector<CayleyTree> enumerate_all(std::size_t n) {
  if (n > 7) throw std::invalid_argument("enumerate_all materializes trees; use for_each_cayley_tree above n = 7");
  std::vector<CayleyTree> out;
  for_each_cayley_tree(n, [&](const CayleyTree& t) { out.push_back(t); });
  return out;
}

std::uint64_t tree_index(const CayleyTree& tree) {
  if (tree.size() < 3) return 0;
  std::uint64_t index = 0;
  for (const Vertex s : prufer_encode(tree).symbols) index = index * tree.size() + (s - 1);
  return index;
}

}  // namespace cayley
