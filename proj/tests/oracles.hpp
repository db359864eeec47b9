#pragma once

// Test-only brute-force oracles.  Nothing here calls into the code paths the
// tests check (no Prüfer decoding, no peeling, no chain tables).

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cayley/trees.hpp"

namespace oracle {

using cayley::Vertex;

// All parent maps on {1..n-1} -> {1..n} that reach n without a cycle, i.e.
// every tree rooted at n.  parent[0] and parent[n] are 0.
inline void for_each_rooted_parent_map(std::size_t n, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> parent(n + 1, 0);
  if (n == 1) {
    fn(parent);
    return;
  }
  for (Vertex v = 1; v < n; ++v) parent[v] = 1;
  while (true) {
    bool ok = true;
    for (Vertex v = 1; v < n && ok; ++v) {
      Vertex x = v;
      std::size_t hops = 0;
      while (x != n && hops <= n) {
        x = parent[x];
        ++hops;
      }
      ok = x == n;
    }
    if (ok) fn(parent);
    Vertex i = 1;
    while (i < n && parent[i] == n) {
      parent[i] = 1;
      ++i;
    }
    if (i == n) return;
    ++parent[i];
  }
}

// Greedy sweep in label order with the full neighbourhood update.
inline std::vector<Vertex> greedy_by_label(const std::vector<Vertex>& parent, std::size_t n) {
  std::vector<int> status(n + 1, 0);  // 0 undetermined, 1 active, 2 blocked
  for (Vertex v = 1; v <= n; ++v) {
    if (status[v] != 0) continue;
    status[v] = 1;
    for (Vertex w = 1; w <= n; ++w) {
      const bool adjacent = (w != n && parent[w] == v) || (v != n && parent[v] == w);
      if (adjacent && status[w] == 0) status[w] = 2;
    }
  }
  std::vector<Vertex> active;
  for (Vertex v = 1; v <= n; ++v)
    if (status[v] == 1) active.push_back(v);
  return active;
}

// Largest independent set by subset enumeration.
inline std::size_t max_independent_set_bruteforce(const std::vector<Vertex>& parent, std::size_t n) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (Vertex v = 1; v < n && independent; ++v) {
      if ((mask >> (v - 1) & 1u) && (mask >> (parent[v] - 1) & 1u)) independent = false;
    }
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace oracle
