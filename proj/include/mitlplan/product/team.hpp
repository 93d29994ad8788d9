#pragma once

#include <limits>
#include <vector>

#include "mitlplan/product/local.hpp"

namespace mitlplan::product {

/// Round-robin product of N local products. Each agent is either at a step
/// boundary (no target) or in the middle of a move to a chosen local
/// successor, `offset` time units after it left. A step lets every agent at
/// a boundary pick its next local edge, then advances time by the smallest
/// remaining duration; the agents whose moves end exactly then arrive
/// together and the rest keep going.
///
/// The turn index waits on agent `turn` until that agent's local state is
/// accepting, then passes to the next agent, wrapping after the last.
/// Accepting states have the turn on the last agent and that agent in an
/// accepting local state.
class TeamProduct {
public:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  struct Member {
    std::size_t local;
    std::size_t target = none;
    Rational offset;
    friend bool operator==(const Member&, const Member&) = default;
  };
  struct State {
    std::vector<Member> members;
    std::size_t turn = 0;
    friend bool operator==(const State&, const State&) = default;
  };

  /// The local products must outlive this object.
  explicit TeamProduct(std::vector<LocalProduct*> locals);

  std::vector<std::size_t> initial_states();
  const std::vector<search::WeightedEdge>& successors(std::size_t id);
  bool accepting(std::size_t id) const;

  const State& state(std::size_t id) const { return states_.at(id); }
  std::size_t agent_count() const { return locals_.size(); }
  LocalProduct& local(std::size_t agent) const { return *locals_[agent]; }
  /// Union of the agents' region labels.
  const AtomSet& letter(std::size_t id);
  /// Agent `agent` is at a step boundary in state `id`.
  bool arrived(std::size_t id, std::size_t agent) const { return state(id).members[agent].target == none; }
  LayerStats stats() const;

private:
  struct Hash {
    std::size_t operator()(const State& s) const;
  };

  std::vector<LocalProduct*> locals_;
  Interner<State, Hash> states_;
  EdgeCache cache_;
  std::vector<AtomSet> letters_;
  std::vector<char> letter_done_;
};

} // namespace mitlplan::product
