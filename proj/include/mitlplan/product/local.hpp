#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

#include "mitlplan/core/intern.hpp"
#include "mitlplan/search/emptiness.hpp"
#include "mitlplan/tba/automaton.hpp"
#include "mitlplan/wts/system.hpp"

namespace mitlplan::product {

class ProductError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct LayerStats {
  std::size_t states = 0;
  std::size_t edges = 0;
  std::size_t accepting = 0;
};

/// Memoized successor lists keyed by dense state id.
class EdgeCache {
public:
  bool has(std::size_t id) const { return id < done_.size() && done_[id]; }
  const std::vector<search::WeightedEdge>& get(std::size_t id) const { return edges_[id]; }
  const std::vector<search::WeightedEdge>& put(std::size_t id, std::vector<search::WeightedEdge> edges);
  std::size_t edge_count() const { return count_; }

private:
  std::deque<std::vector<search::WeightedEdge>> edges_; // deque: references survive growth
  std::vector<char> done_;
  std::size_t count_ = 0;
};

/// One agent's system in lockstep with its automaton. A state pairs a
/// region with an automaton location whose label equals the region's label
/// (restricted to the automaton alphabet), plus clock values. A move takes
/// a system transition and an automaton edge together: the guard is read
/// before the move, clocks then advance by the transition weight, reset
/// clocks drop to 0 and the target invariant must hold.
class LocalProduct {
public:
  struct State {
    wts::StateId region;
    std::size_t location;
    tba::Valuation clocks;
    friend bool operator==(const State&, const State&) = default;
  };

  /// Throws ProductError when the automaton reads atoms the system does not
  /// own.
  LocalProduct(wts::WeightedTransitionSystem system, tba::TimedBuchiAutomaton automaton);

  /// May be empty: then no run of the system can match the automaton at
  /// time 0. Callers report this as unsatisfiable.
  std::vector<std::size_t> initial_states() { return initial_; }
  const std::vector<search::WeightedEdge>& successors(std::size_t id);
  bool accepting(std::size_t id) const { return automaton_.locations()[states_.at(id).location].accepting; }

  const State& state(std::size_t id) const { return states_.at(id); }
  /// Weight of the memoized edge id -> target. Throws when there is none.
  const Rational& edge_weight(std::size_t id, std::size_t target);
  const wts::WeightedTransitionSystem& system() const { return system_; }
  const tba::TimedBuchiAutomaton& automaton() const { return automaton_; }
  LayerStats stats() const;

private:
  struct Hash {
    std::size_t operator()(const State& s) const;
  };

  wts::WeightedTransitionSystem system_;
  tba::TimedBuchiAutomaton automaton_;
  Interner<State, Hash> states_;
  EdgeCache cache_;
  std::vector<std::size_t> initial_;
};

} // namespace mitlplan::product
