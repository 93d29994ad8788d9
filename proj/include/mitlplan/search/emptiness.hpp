#pragma once

// Büchi emptiness on lazily generated graphs.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mitlplan/core/rational.hpp"

namespace mitlplan::search {

struct WeightedEdge {
  std::size_t target;
  Rational weight;
};

/// A graph whose states are dense ids handed out by the graph itself.
/// `successors` may generate states on demand.
template <typename G>
concept BuchiGraph = requires(G& g, std::size_t s) {
  { g.initial_states() } -> std::convertible_to<std::vector<std::size_t>>;
  { g.successors(s) } -> std::convertible_to<std::vector<WeightedEdge>>;
  { g.accepting(s) } -> std::convertible_to<bool>;
};

enum class Emptiness { NonEmpty, Empty, LimitExceeded };

/// An accepting lasso: prefix states from an initial state, then cycle states
/// with an edge from the last cycle state back to the first. Each weight is
/// the one on the edge leaving the state at the same index; the last prefix
/// state leads into cycle[0].
struct AcceptingLasso {
  std::vector<std::size_t> prefix;
  std::vector<Rational> prefix_weights;
  std::vector<std::size_t> cycle;
  std::vector<Rational> cycle_weights;
};

struct EmptinessResult {
  Emptiness verdict = Emptiness::Empty;
  std::optional<AcceptingLasso> lasso;
  std::size_t states_visited = 0;
};

inline constexpr std::size_t default_state_budget = 5'000'000;

/// Nested depth-first search with cyan/blue/red colouring and early cycle
/// detection (Schwoon and Esparza). Iterative, so deep graphs do not
/// overflow the call stack. Stops with LimitExceeded once more than `budget`
/// distinct states have been coloured.
template <BuchiGraph G>
EmptinessResult find_accepting_lasso(G& graph, std::size_t budget = default_state_budget) {
  enum Color : std::uint8_t { White, Cyan, Blue, Red };
  std::vector<std::uint8_t> color;
  EmptinessResult result;

  auto color_of = [&](std::size_t s) -> std::uint8_t {
    return s < color.size() ? color[s] : std::uint8_t{White};
  };
  auto paint = [&](std::size_t s, Color c) {
    if (s >= color.size())
      color.resize(s + 1 + s / 2, White);
    color[s] = c;
  };

  struct Frame {
    std::size_t state;
    std::vector<WeightedEdge> edges;
    std::size_t next = 0;
  };
  std::vector<Frame> blue;

  auto index_on_blue = [&](std::size_t s) {
    for (std::size_t k = blue.size(); k-- > 0;)
      if (blue[k].state == s)
        return k;
    return blue.size();
  };

  // Returns true when a cycle was reported.
  auto red_search = [&](std::size_t seed) -> bool {
    std::vector<Frame> red;
    red.push_back({seed, graph.successors(seed)});
    while (!red.empty()) {
      Frame& top = red.back();
      if (top.next == top.edges.size()) {
        red.pop_back();
        continue;
      }
      const WeightedEdge e = top.edges[top.next++];
      const auto c = color_of(e.target);
      if (c == Cyan) {
        // Cycle: blue stack from the cyan target up to (excluding) the seed,
        // then the red path that starts at the seed.
        const std::size_t from = index_on_blue(e.target);
        AcceptingLasso lasso;
        for (std::size_t k = 0; k < from; ++k) {
          lasso.prefix.push_back(blue[k].state);
          lasso.prefix_weights.push_back(blue[k].edges[blue[k].next - 1].weight);
        }
        for (std::size_t k = from; k + 1 < blue.size(); ++k) {
          lasso.cycle.push_back(blue[k].state);
          lasso.cycle_weights.push_back(blue[k].edges[blue[k].next - 1].weight);
        }
        for (const auto& f : red) {
          lasso.cycle.push_back(f.state);
          lasso.cycle_weights.push_back(f.edges[f.next - 1].weight);
        }
        result.verdict = Emptiness::NonEmpty;
        result.lasso = std::move(lasso);
        return true;
      }
      if (c == Blue) {
        paint(e.target, Red);
        red.push_back({e.target, graph.successors(e.target)});
      }
    }
    return false;
  };

  for (std::size_t init : graph.initial_states()) {
    if (color_of(init) != White)
      continue;
    if (++result.states_visited > budget) {
      result.verdict = Emptiness::LimitExceeded;
      return result;
    }
    paint(init, Cyan);
    blue.push_back({init, graph.successors(init)});
    while (!blue.empty()) {
      Frame& top = blue.back();
      if (top.next < top.edges.size()) {
        const WeightedEdge e = top.edges[top.next++];
        const auto c = color_of(e.target);
        if (c == Cyan && (graph.accepting(top.state) || graph.accepting(e.target))) {
          const std::size_t from = index_on_blue(e.target);
          AcceptingLasso lasso;
          for (std::size_t k = 0; k < from; ++k) {
            lasso.prefix.push_back(blue[k].state);
            lasso.prefix_weights.push_back(blue[k].edges[blue[k].next - 1].weight);
          }
          for (std::size_t k = from; k < blue.size(); ++k) {
            lasso.cycle.push_back(blue[k].state);
            lasso.cycle_weights.push_back(blue[k].edges[blue[k].next - 1].weight);
          }
          result.verdict = Emptiness::NonEmpty;
          result.lasso = std::move(lasso);
          return result;
        }
        if (c == White) {
          if (++result.states_visited > budget) {
            result.verdict = Emptiness::LimitExceeded;
            return result;
          }
          paint(e.target, Cyan);
          blue.push_back({e.target, graph.successors(e.target)});
        }
        continue;
      }
      const std::size_t s = top.state;
      if (graph.accepting(s)) {
        if (red_search(s))
          return result;
        paint(s, Red);
      } else {
        paint(s, Blue);
      }
      blue.pop_back();
    }
  }
  result.verdict = Emptiness::Empty;
  return result;
}

} // namespace mitlplan::search
