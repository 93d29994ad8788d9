#pragma once

#include "mitlplan/core/lasso.hpp"
#include "mitlplan/tba/automaton.hpp"

namespace mitlplan::tba {

/// Does the automaton have an accepting run producing `word`?
///
/// Run semantics: position 0 starts in an initial location whose label
/// matches the first letter, with every clock at 0 satisfying its
/// invariant. Moving from position i to i+1 takes an edge whose guard holds
/// on the clocks at position i; the clocks then advance by the time
/// difference (reset clocks become 0), the target invariant must hold on the
/// result and the target label must match letter i+1.
///
/// Decided by Büchi emptiness of the product of the word's lasso with the
/// automaton, clocks saturated above cmax.
bool accepts_lasso(const TimedBuchiAutomaton& automaton, const LassoTimedWord& word);

/// Label test used by every product: the letter restricted to the
/// automaton alphabet equals the location label.
bool label_matches(const TimedBuchiAutomaton& automaton, std::size_t location, const AtomSet& letter);

} // namespace mitlplan::tba
