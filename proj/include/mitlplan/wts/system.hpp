#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mitlplan/core/atoms.hpp"
#include "mitlplan/core/rational.hpp"

namespace mitlplan::wts {

using StateId = std::size_t;

class SystemError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Transition {
  StateId from;
  StateId to;
  Rational weight;
};

/// One agent's motion model: regions, moves between them with positive
/// durations, and region labels.
class WeightedTransitionSystem {
public:
  WeightedTransitionSystem(std::string name, std::vector<std::string> states, std::vector<StateId> initial,
                           std::vector<Transition> transitions, AtomSet atoms, std::vector<AtomSet> labels);

  const std::string& name() const { return name_; }
  std::size_t state_count() const { return states_.size(); }
  const std::string& state_name(StateId s) const { return states_[s]; }
  const std::vector<std::string>& state_names() const { return states_; }
  StateId find_state(const std::string& name) const;

  const std::vector<StateId>& initial() const { return initial_; }
  bool is_initial(StateId s) const;
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Indices into transitions() leaving `s`, ordered by target id.
  const std::vector<std::size_t>& outgoing(StateId s) const { return outgoing_[s]; }
  std::optional<Rational> weight(StateId from, StateId to) const;

  const AtomSet& atoms() const { return atoms_; }
  const AtomSet& label(StateId s) const { return labels_[s]; }
  /// Distinct labels over all states.
  std::vector<AtomSet> distinct_labels() const;

  /// Every weight multiplied by `factor`.
  WeightedTransitionSystem scaled(const Rational& factor) const;

private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<StateId> initial_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> outgoing_;
  AtomSet atoms_;
  std::vector<AtomSet> labels_;
};

/// Atom sets of different agents must not overlap.
void check_disjoint_atoms(const std::vector<WeightedTransitionSystem>& systems);

} // namespace mitlplan::wts
