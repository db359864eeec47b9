#include "cayley/peeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cayley {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

void check_label(std::size_t n, Vertex v) {
  if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

ForestState::ForestState(std::size_t n)
    : n_(n),
      sets_(n + 1),
      root_(n + 1),
      color_(n + 1, Color::white),
      next_(n + 1),
      parent_(n + 1, kNoVertex),
      white_root_pos_(n + 1, kAbsent),
      white_pos_(n + 1, kAbsent) {
  if (n == 0) throw std::invalid_argument("a forest needs at least one vertex");
  for (Vertex v = 0; v <= n; ++v) {
    root_[v] = v;
    next_[v] = v;
  }
  color_[n] = Color::blue;
  blue_vertices_.push_back(static_cast<Vertex>(n));
  white_roots_.reserve(n - 1);
  white_vertices_.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    white_root_pos_[v] = white_roots_.size();
    white_roots_.push_back(v);
    white_pos_[v] = white_vertices_.size();
    white_vertices_.push_back(v);
  }
}

std::uint32_t ForestState::rep(Vertex v) const {
  check_label(n_, v);
  return sets_.find(v);
}

bool ForestState::is_white_root(Vertex v) const {
  check_label(n_, v);
  return white_root_pos_[v] != kAbsent;
}

Vertex ForestState::smallest_white() const {
  // Vertices only ever turn blue, so the cursor never moves back.
  while (smallest_white_cursor_ < n_ && white_pos_[smallest_white_cursor_] == kAbsent) {
    ++smallest_white_cursor_;
  }
  return smallest_white_cursor_ < n_ ? smallest_white_cursor_ : kNoVertex;
}

std::vector<Vertex> ForestState::members(Vertex v) const {
  check_label(n_, v);
  std::vector<Vertex> out{v};
  for (Vertex x = next_[v]; x != v; x = next_[x]) out.push_back(x);
  return out;
}

void ForestState::drop_white_root(Vertex v) {
  const std::size_t pos = white_root_pos_[v];
  white_roots_[pos] = white_roots_.back();
  white_root_pos_[white_roots_[pos]] = pos;
  white_roots_.pop_back();
  white_root_pos_[v] = kAbsent;
}

PeelStep ForestState::attach(Vertex v1, Vertex v2) {
  check_label(n_, v1);
  check_label(n_, v2);
  if (!is_white_root(v1)) throw std::invalid_argument("attach: " + std::to_string(v1) + " is not a white root");
  const auto r1 = sets_.find(v1);
  const auto r2 = sets_.find(v2);
  if (r1 == r2) throw std::invalid_argument("attach: both vertices lie in the same component");

  const Color target_color = color_[r2];
  const Vertex target_root = root_[r2];
  if (target_color == Color::blue) {
    for (const Vertex x : members(v1)) {
      const std::size_t pos = white_pos_[x];
      white_vertices_[pos] = white_vertices_.back();
      white_pos_[white_vertices_[pos]] = pos;
      white_vertices_.pop_back();
      white_pos_[x] = kAbsent;
      blue_vertices_.push_back(x);
    }
  }
  drop_white_root(v1);
  std::swap(next_[v1], next_[v2]);  // splice the two circular lists
  const auto merged = sets_.unite(r1, r2);
  root_[merged] = target_root;
  color_[merged] = target_color;
  parent_[v1] = v2;
  ++edge_count_;
  return PeelStep{v1, v2, target_color == Color::blue};
}

CayleyTree ForestState::to_tree() const {
  if (!complete()) throw std::logic_error("to_tree: exploration is not complete");
  return CayleyTree(n_, std::vector<Vertex>(parent_.begin() + 1, parent_.begin() + static_cast<std::ptrdiff_t>(n_)));
}

PeelingAlgorithm unif_algorithm(RandomSource rng) {
  return [rng](const ForestState& state) mutable -> Vertex {
    const auto roots = state.white_roots();
    if (roots.empty()) return kNoVertex;
    return roots[rng.uniform_below(roots.size())];
  };
}

PeelingAlgorithm ab_algorithm() {
  return [](const ForestState& state) -> Vertex {
    const Vertex smallest = state.smallest_white();
    return smallest == kNoVertex ? kNoVertex : state.component_root(smallest);
  };
}

PeelingAlgorithm greedy_algorithm() {
  // Labels below the cursor are already out of play; one rule per exploration.
  return [cursor = Vertex{1}](const ForestState& state) mutable -> Vertex {
    while (cursor < state.n() &&
           (state.color(cursor) == Color::blue || state.component_size(cursor) != 1)) {
      ++cursor;
    }
    return cursor < state.n() ? cursor : kNoVertex;
  };
}

mpz_class count_containing_trees(const ForestState& state) {
  const std::size_t n = state.n();
  const std::size_t k = state.edge_count();
  if (k + 1 == n) return 1;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), n, n - k - 2);
  return mpz_class(static_cast<unsigned long>(state.blue_size())) * power;
}

std::vector<PeelStep> peel_fixed_tree(const CayleyTree& tree, const PeelingAlgorithm& alg) {
  ForestState state(tree.size());
  std::vector<PeelStep> steps;
  steps.reserve(tree.size() - 1);
  while (!state.complete()) {
    const Vertex v = alg(state);
    if (v == kNoVertex) break;
    if (!state.is_white_root(v)) throw std::logic_error("peeling algorithm returned a non white root");
    steps.push_back(state.attach(v, tree.parent(v)));
  }
  return steps;
}

namespace {

// One transition of the exploration of a uniform tree: picks v's parent.
Vertex sample_parent(const ForestState& state, Vertex v, RandomSource& rng) {
  const std::size_t n = state.n();
  const std::size_t blue = state.blue_size();
  const std::size_t m = state.component_size(v);
  const std::size_t white_total = state.white_vertices().size();
  // Blue class weight (l+m), compatible white class weight (n-l-m), over n.
  if (blue + white_total != n || white_total < m) {
    throw std::logic_error("transition probabilities do not sum to one");
  }
  const std::size_t compatible_white = white_total - m;
  if (rng.uniform_below(n) < blue + m) {
    return state.blue_vertices()[rng.uniform_below(blue)];
  }
  const auto whites = state.white_vertices();
  if (4 * compatible_white >= white_total) {
    while (true) {
      const Vertex w = whites[rng.uniform_below(white_total)];
      if (!state.same_component(w, v)) return w;
    }
  }
  std::vector<Vertex> candidates;
  candidates.reserve(compatible_white);
  for (const Vertex w : whites) {
    if (!state.same_component(w, v)) candidates.push_back(w);
  }
  return candidates[rng.uniform_below(candidates.size())];
}

}  // namespace

PeelRun peel_markov(std::size_t n, const PeelingAlgorithm& alg, RandomSource& rng) {
  ForestState state(n);
  PeelRun run;
  run.steps.reserve(n - 1);
  while (!state.complete()) {
    const Vertex v = alg(state);
    if (v == kNoVertex) break;
    if (!state.is_white_root(v)) throw std::logic_error("peeling algorithm returned a non white root");
    run.steps.push_back(state.attach(v, sample_parent(state, v, rng)));
  }
  if (state.complete()) run.tree = state.to_tree();
  return run;
}

std::size_t first_branch_length(std::size_t n, RandomSource& rng) {
  if (n < 2) throw std::invalid_argument("first_branch_length needs n >= 2");
  ForestState state(n);
  const auto alg = ab_algorithm();
  std::size_t steps = 0;
  while (state.color(1) != Color::blue) {
    const Vertex v = alg(state);
    state.attach(v, sample_parent(state, v, rng));
    ++steps;
  }
  return steps;
}

std::vector<double> first_branch_law(std::size_t n) {
  if (n < 2) throw std::invalid_argument("first_branch_law needs n >= 2");
  const auto nn = static_cast<double>(n);
  std::vector<double> law(n, 0.0);
  double survive = 1.0;  // prod_{i=2}^{k} (1 - i/n)
  for (std::size_t k = 1; k < n; ++k) {
    law[k] = static_cast<double>(k + 1) / nn * survive;
    survive *= 1.0 - static_cast<double>(k + 1) / nn;
  }
  return law;
}

}  // namespace cayley
