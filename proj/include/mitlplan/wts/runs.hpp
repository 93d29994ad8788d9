#pragma once

#include <vector>

#include "mitlplan/core/lasso.hpp"
#include "mitlplan/wts/system.hpp"

namespace mitlplan::wts {

/// Lasso over states with arrival times.
using TimedRun = Lasso<StateId>;

class RunError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws RunError unless the run starts at time 0 in an initial state and
/// every step, including the wrap from the cycle end back to its start,
/// is a transition whose weight equals the time difference.
void validate_run(const WeightedTransitionSystem& system, const TimedRun& run);

/// Labels applied pointwise.
LassoTimedWord timed_word_of(const WeightedTransitionSystem& system, const TimedRun& run);

using StateVector = std::vector<StateId>;

/// The team's merged run. `advanced[s]` marks, for slot s of the lasso
/// (prefix then cycle), which agents arrived at that position; at position 0
/// every agent counts as arrived.
struct CollectiveRun {
  Lasso<StateVector> states;
  std::vector<std::vector<char>> advanced;

  bool agent_advanced(std::size_t position, std::size_t agent) const {
    return advanced[states.slot(position)][agent] != 0;
  }
  friend bool operator==(const CollectiveRun&, const CollectiveRun&) = default;
};

/// Merges individual runs by arrival events: at each step every agent whose
/// next arrival is the earliest completes its move together; the others stay
/// where they are. The cycle closes at the first repetition of each agent's
/// cycle slot together with the time since its last arrival.
CollectiveRun collective_run(const std::vector<TimedRun>& runs);

/// Union of the agents' labels at each position.
LassoTimedWord collective_word_of(const std::vector<WeightedTransitionSystem>& systems,
                                  const CollectiveRun& run);

/// The run of one agent recovered from the collective run: its component at
/// the positions where it arrived. Returned in canonical form.
TimedRun project(const CollectiveRun& run, std::size_t agent);

} // namespace mitlplan::wts
