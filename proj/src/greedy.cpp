#include "cayley/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

void require_permutation(std::span<const Vertex> order, std::size_t count, const char* what) {
  if (order.size() != count) throw std::invalid_argument(std::string(what) + ": wrong length");
  std::vector<bool> seen(count + 1, false);
  for (const Vertex v : order) {
    if (v < 1 || v > count || seen[v]) throw std::invalid_argument(std::string(what) + ": not a permutation");
    seen[v] = true;
  }
}

void set_status(std::vector<VertexStatus>& status, Vertex v, VertexStatus next) {
  if (status[v] != VertexStatus::undetermined) throw std::logic_error("vertex status changed twice");
  status[v] = next;
}

}  // namespace

TransitionTable chain_transitions(const StatusChainState& s, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  if (s.undetermined < 1) throw std::invalid_argument("chain_transitions: no undetermined vertex left");
  if (s.active_white < 0 || s.blocked_white < 0 || s.active_blue < 0 || s.blocked_blue < 0) {
    throw std::invalid_argument("chain_transitions: negative count");
  }
  if (s.total() != nn) throw std::invalid_argument("chain_transitions: counts do not add up to n");

  TransitionTable table;
  auto add = [&](std::int64_t num, std::int64_t den, StatusChainState delta, bool root_only = false) {
    if (num > 0) table.columns[table.size++] = ChainTransition{num, den, delta, root_only};
  };

  const bool root_undetermined = s.active_blue == 0 && s.blocked_blue == 0;
  if (root_undetermined) {
    if (s.undetermined == 1) {
      add(1, 1, {-1, 0, 0, 1, 0}, true);
    } else {
      add(s.undetermined - 2, nn, {-2, 1, 1, 0, 0});
      add(s.active_white, nn, {-1, 0, 1, 0, 0});
      add(s.blocked_white, nn, {-1, 1, 0, 0, 0});
      add(2, nn, {-2, 0, 0, 1, 1});
    }
  } else {
    if (s.active_blue < 1 || s.blocked_blue < 1) {
      throw std::invalid_argument("chain_transitions: blue counts must both be zero or both positive");
    }
    const std::int64_t blue = s.active_blue + s.blocked_blue;
    const std::int64_t den = blue * nn;
    add((s.undetermined - 1) * blue, den, {-2, 1, 1, 0, 0});
    add(s.active_white * blue, den, {-1, 0, 1, 0, 0});
    add(s.blocked_white * blue, den, {-1, 1, 0, 0, 0});
    add(s.active_blue * (blue + 1), den, {-1, 0, 0, 0, 1});
    add(s.blocked_blue * (blue + 1), den, {-1, 0, 0, 1, 0});
  }

  std::int64_t sum = 0;
  for (const auto& column : table) sum += column.numerator;
  if (table.size == 0 || sum != table.columns[0].denominator) {
    throw std::logic_error("chain_transitions: probabilities do not sum to one");
  }
  return table;
}

std::vector<Vertex> greedy_reference(const CayleyTree& tree, std::span<const Vertex> order) {
  const std::size_t n = tree.size();
  require_permutation(order, n, "greedy_reference");
  const auto adjacency = tree.adjacency();
  std::vector<VertexStatus> status(n + 1, VertexStatus::undetermined);
  std::vector<Vertex> active;
  for (const Vertex v : order) {
    if (status[v] != VertexStatus::undetermined) continue;
    set_status(status, v, VertexStatus::active);
    active.push_back(v);
    for (const Vertex w : adjacency[v]) {
      if (status[w] == VertexStatus::undetermined) set_status(status, w, VertexStatus::blocked);
    }
  }
  std::sort(active.begin(), active.end());
  return active;
}

GreedyOutcome greedy_peeling(const CayleyTree& tree, std::vector<PeelStep>* trace) {
  const std::size_t n = tree.size();
  const auto root = static_cast<Vertex>(n);
  std::vector<VertexStatus> status(n + 1, VertexStatus::undetermined);
  ForestState forest(n);
  GreedyOutcome out;
  std::size_t undetermined = n;
  Vertex cursor = 1;

  while (undetermined > 0) {
    while (status[cursor] != VertexStatus::undetermined) ++cursor;
    const Vertex v = cursor;
    ++out.theta;
    if (v == root) {
      // Only n is left: it turns active without a peeling step.
      out.E = true;
      set_status(status, v, VertexStatus::active);
      --undetermined;
      break;
    }
    const Vertex w = tree.parent(v);
    const PeelStep step = forest.attach(v, w);
    if (trace != nullptr) trace->push_back(step);
    switch (status[w]) {
      case VertexStatus::undetermined:
        set_status(status, v, VertexStatus::active);
        set_status(status, w, VertexStatus::blocked);
        undetermined -= 2;
        break;
      case VertexStatus::blocked:
        set_status(status, v, VertexStatus::active);
        --undetermined;
        break;
      case VertexStatus::active:
        set_status(status, v, VertexStatus::blocked);
        --undetermined;
        break;
    }
  }

  for (Vertex v = 1; v <= n; ++v) {
    if (status[v] == VertexStatus::active) out.active_set.push_back(v);
  }
  out.G = out.active_set.size();
  return out;
}

StatusChainState status_chain_step(const StatusChainState& s, std::size_t n, RandomSource& rng) {
  const auto table = chain_transitions(s, n);
  auto r = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(table.columns[0].denominator)));
  for (const auto& column : table) {
    if (r < column.numerator) {
      const StatusChainState next{s.undetermined + column.delta.undetermined,
                                  s.active_white + column.delta.active_white,
                                  s.blocked_white + column.delta.blocked_white,
                                  s.active_blue + column.delta.active_blue,
                                  s.blocked_blue + column.delta.blocked_blue};
      if (next.total() != static_cast<std::int64_t>(n)) throw std::logic_error("status chain lost a vertex");
      return next;
    }
    r -= column.numerator;
  }
  throw std::logic_error("status_chain_step: sampling fell through the table");
}

GreedyOutcome simulate_status_chain(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  GreedyOutcome out;
  StatusChainState s = StatusChainState::initial(n);
  while (s.undetermined > 0) {
    if (s.undetermined == 1 && s.active_blue == 0 && s.blocked_blue == 0) out.E = true;
    s = status_chain_step(s, n, rng);
    ++out.theta;
  }
  out.G = static_cast<std::size_t>(s.active());
  return out;
}

std::size_t greedy_matching(const CayleyTree& tree, std::span<const Vertex> edge_order) {
  const std::size_t n = tree.size();
  require_permutation(edge_order, n - 1, "greedy_matching");
  std::vector<bool> matched(n + 1, false);
  std::size_t size = 0;
  for (const Vertex child : edge_order) {
    const Vertex p = tree.parent(child);
    if (matched[child] || matched[p]) continue;
    matched[child] = matched[p] = true;
    ++size;
  }
  return size;
}

std::size_t max_independent_set(const CayleyTree& tree) {
  const std::size_t n = tree.size();
  // Children before parents: reverse BFS order from the root.
  std::vector<std::vector<Vertex>> children(n + 1);
  for (Vertex v = 1; v < n; ++v) children[tree.parent(v)].push_back(v);
  std::vector<Vertex> order{tree.root()};
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Vertex c : children[order[i]]) order.push_back(c);
  }
  std::vector<std::size_t> with(n + 1, 1), without(n + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    for (const Vertex c : children[v]) {
      with[v] += without[c];
      without[v] += std::max(with[c], without[c]);
    }
  }
  return std::max(with[tree.root()], without[tree.root()]);
}

std::vector<Vertex> random_order(std::size_t count, RandomSource& rng) {
  std::vector<Vertex> order(count);
  std::iota(order.begin(), order.end(), Vertex{1});
  for (std::size_t i = count; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform_below(i)]);
  }
  return order;
}

}  // namespace cayley
