#pragma once

#include "mitlplan/tba/automaton.hpp"

namespace mitlplan::tba {

/// Product automaton accepting the words both accept. Locations are
/// (location of a, location of b, flag) restricted to pairs whose labels
/// agree on the shared atoms; the flag moves 1 -> 2 when leaving an
/// accepting location of `a` and 2 -> 1 when leaving one of `b`. Clocks are
/// renamed with prefixes "a_" and "b_". Only reachable locations are kept.
TimedBuchiAutomaton intersect(const TimedBuchiAutomaton& a, const TimedBuchiAutomaton& b);

} // namespace mitlplan::tba
