#pragma once

#include <cstdint>

#include "mitlplan/product/team.hpp"

namespace mitlplan::product {

/// Team product in lockstep with the team automaton, read on the collective
/// letters. Acceptance of the two Büchi conditions is combined with a flag:
/// flag 1 waits for an accepting team state, flag 2 for an accepting
/// automaton location. Accepting states carry flag 1 and an accepting team
/// state. Initial states start with flag 1.
class GlobalProduct {
public:
  struct State {
    std::size_t team;
    std::size_t location;
    tba::Valuation clocks;
    std::uint8_t flag;
    friend bool operator==(const State&, const State&) = default;
  };

  /// `team` must outlive this object. Throws ProductError when the automaton
  /// reads atoms no agent owns.
  GlobalProduct(TeamProduct& team, tba::TimedBuchiAutomaton automaton);

  std::vector<std::size_t> initial_states();
  const std::vector<search::WeightedEdge>& successors(std::size_t id);
  bool accepting(std::size_t id) const;

  const State& state(std::size_t id) const { return states_.at(id); }
  TeamProduct& team() const { return team_; }
  const tba::TimedBuchiAutomaton& automaton() const { return automaton_; }
  LayerStats stats() const;

private:
  struct Hash {
    std::size_t operator()(const State& s) const;
  };

  TeamProduct& team_;
  tba::TimedBuchiAutomaton automaton_;
  Interner<State, Hash> states_;
  EdgeCache cache_;
  bool initialized_ = false;
  std::vector<std::size_t> initial_;
};

} // namespace mitlplan::product
