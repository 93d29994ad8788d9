#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mitlplan/core/atoms.hpp"
#include "mitlplan/tba/clock_constraint.hpp"

namespace mitlplan::tba {

class AutomatonError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Location {
  std::string name;
  AtomSet label;
  ClockConstraint invariant;
  bool accepting = false;
  bool initial = false;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  ClockConstraint guard;
  std::vector<int> resets;
};

/// State-labelled timed Büchi automaton. Labels are subsets of `alphabet`;
/// a word letter is matched against a label after restricting the letter to
/// the alphabet.
class TimedBuchiAutomaton {
public:
  TimedBuchiAutomaton(AtomSet alphabet, std::vector<std::string> clocks,
                      std::vector<Location> locations, std::vector<Edge> edges);

  const AtomSet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& clocks() const { return clocks_; }
  const std::vector<Location>& locations() const { return locations_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& initial_locations() const { return initial_; }
  /// Indices into edges(), grouped by source location.
  const std::vector<std::size_t>& outgoing(std::size_t location) const { return outgoing_[location]; }

  std::size_t clock_count() const { return clocks_.size(); }
  /// Largest constant in any guard or invariant (0 when there are none).
  const Rational& cmax() const { return cmax_; }

  TimedBuchiAutomaton scaled(const Rational& factor) const;
  /// Every constant in guards and invariants.
  std::vector<Rational> constants() const;

  std::size_t find_location(const std::string& name) const;

private:
  AtomSet alphabet_;
  std::vector<std::string> clocks_;
  std::vector<Location> locations_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> initial_;
  std::vector<std::vector<std::size_t>> outgoing_;
  Rational cmax_;
};

/// One step of a run: from valuation `v` along `edge` with `delay` time
/// units. Returns false if the guard fails on `v` or the target invariant
/// fails on the successor valuation written to `out`. Non-reset clocks gain
/// `delay` and saturate to infinity above cmax.
bool step(const TimedBuchiAutomaton& a, const Valuation& v, const Edge& edge, const Rational& delay,
          Valuation& out);

/// Every clock at zero.
Valuation zero_valuation(const TimedBuchiAutomaton& a);

/// Accepts every word over `alphabet`.
TimedBuchiAutomaton universal_automaton(const AtomSet& alphabet);
/// Accepts nothing.
TimedBuchiAutomaton empty_automaton(const AtomSet& alphabet);

} // namespace mitlplan::tba
