#include "mitlplan/wts/system.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace mitlplan::wts {

WeightedTransitionSystem::WeightedTransitionSystem(std::string name, std::vector<std::string> states,
                                                   std::vector<StateId> initial,
                                                   std::vector<Transition> transitions, AtomSet atoms,
                                                   std::vector<AtomSet> labels)
    : name_(std::move(name)), states_(std::move(states)), initial_(std::move(initial)),
      transitions_(std::move(transitions)), atoms_(std::move(atoms)), labels_(std::move(labels)) {
  if (states_.empty())
    throw SystemError("system '" + name_ + "' has no states");
  if (std::set<std::string>(states_.begin(), states_.end()).size() != states_.size())
    throw SystemError("system '" + name_ + "' declares a state twice");
  if (initial_.empty())
    throw SystemError("system '" + name_ + "' has no initial state");
  for (StateId s : initial_)
    if (s >= states_.size())
      throw SystemError("system '" + name_ + "': initial state out of range");
  labels_.resize(states_.size());
  for (std::size_t s = 0; s < states_.size(); ++s)
    if (!labels_[s].subset_of(atoms_))
      throw SystemError("system '" + name_ + "': label " + labels_[s].str() + " of " + states_[s] +
                        " uses atoms outside " + atoms_.str());
  std::sort(transitions_.begin(), transitions_.end(),
            [](const Transition& a, const Transition& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  outgoing_.resize(states_.size());
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    const auto& tr = transitions_[t];
    if (tr.from >= states_.size() || tr.to >= states_.size())
      throw SystemError("system '" + name_ + "': transition endpoint out of range");
    if (tr.weight <= Rational(0))
      throw SystemError("system '" + name_ + "': transition " + states_[tr.from] + " -> " + states_[tr.to] +
                        " has non-positive weight " + tr.weight.str());
    if (t > 0 && transitions_[t - 1].from == tr.from && transitions_[t - 1].to == tr.to)
      throw SystemError("system '" + name_ + "': duplicate transition " + states_[tr.from] + " -> " +
                        states_[tr.to]);
    outgoing_[tr.from].push_back(t);
  }
}

StateId WeightedTransitionSystem::find_state(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end())
    throw SystemError("system '" + name_ + "' has no state '" + name + "'");
  return static_cast<StateId>(it - states_.begin());
}

bool WeightedTransitionSystem::is_initial(StateId s) const {
  return std::find(initial_.begin(), initial_.end(), s) != initial_.end();
}

std::optional<Rational> WeightedTransitionSystem::weight(StateId from, StateId to) const {
  for (std::size_t t : outgoing_[from])
    if (transitions_[t].to == to)
      return transitions_[t].weight;
  return std::nullopt;
}

std::vector<AtomSet> WeightedTransitionSystem::distinct_labels() const {
  std::vector<AtomSet> out(labels_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WeightedTransitionSystem WeightedTransitionSystem::scaled(const Rational& factor) const {
  auto transitions = transitions_;
  for (auto& t : transitions)
    t.weight = t.weight * factor;
  return WeightedTransitionSystem(name_, states_, initial_, std::move(transitions), atoms_, labels_);
}

void check_disjoint_atoms(const std::vector<WeightedTransitionSystem>& systems) {
  for (std::size_t i = 0; i < systems.size(); ++i)
    for (std::size_t j = i + 1; j < systems.size(); ++j)
      if (!systems[i].atoms().disjoint(systems[j].atoms()))
        throw SystemError("agents '" + systems[i].name() + "' and '" + systems[j].name() +
                          "' share atoms " + systems[i].atoms().intersected(systems[j].atoms()).str());
}

} // namespace mitlplan::wts
