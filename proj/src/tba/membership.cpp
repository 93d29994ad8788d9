#include "mitlplan/tba/membership.hpp"

#include <limits>

#include "mitlplan/core/intern.hpp"
#include "mitlplan/search/emptiness.hpp"

namespace mitlplan::tba {

bool label_matches(const TimedBuchiAutomaton& automaton, std::size_t location, const AtomSet& letter) {
  return letter.intersected(automaton.alphabet()) == automaton.locations()[location].label;
}

namespace {

struct RunState {
  std::size_t slot;
  std::size_t location;
  Valuation clocks;

  friend bool operator==(const RunState&, const RunState&) = default;
};

struct RunStateHash {
  std::size_t operator()(const RunState& s) const {
    std::size_t seed = s.slot;
    hash_combine(seed, s.location);
    for (const auto& v : s.clocks)
      hash_combine(seed, v.hash());
    return seed;
  }
};

// Synchronous product of a lasso word (positions folded onto prefix+cycle
// slots) with the automaton.
class WordProduct {
public:
  WordProduct(const TimedBuchiAutomaton& a, const LassoTimedWord& w) : a_(a), w_(w) {
    slots_ = w.prefix_length() + w.cycle_length();
    // The first visit of each slot has the same time step as every later one.
    for (std::size_t s = 0; s < slots_; ++s)
      delay_.push_back(w.time_at(s + 1) - w.time_at(s));
  }

  std::vector<std::size_t> initial_states() {
    std::vector<std::size_t> out;
    const Valuation zero = zero_valuation(a_);
    for (std::size_t l : a_.initial_locations())
      if (label_matches(a_, l, w_.value_at(0)) && a_.locations()[l].invariant.holds(zero))
        out.push_back(states_.intern({0, l, zero}).first);
    return out;
  }

  std::vector<search::WeightedEdge> successors(std::size_t id) {
    const RunState from = states_.at(id);
    const std::size_t to_slot = next_slot(from.slot);
    const AtomSet& letter = w_.value_at(to_slot);
    std::vector<search::WeightedEdge> out;
    Valuation next;
    for (std::size_t e : a_.outgoing(from.location)) {
      const Edge& edge = a_.edges()[e];
      if (!label_matches(a_, edge.to, letter))
        continue;
      if (!step(a_, from.clocks, edge, delay_[from.slot], next))
        continue;
      out.push_back({states_.intern({to_slot, edge.to, next}).first, delay_[from.slot]});
    }
    return out;
  }

  bool accepting(std::size_t id) { return a_.locations()[states_.at(id).location].accepting; }

private:
  std::size_t next_slot(std::size_t s) const { return s + 1 < slots_ ? s + 1 : w_.prefix_length(); }

  const TimedBuchiAutomaton& a_;
  const LassoTimedWord& w_;
  std::size_t slots_ = 0;
  std::vector<Rational> delay_;
  Interner<RunState, RunStateHash> states_;
};

} // namespace

bool accepts_lasso(const TimedBuchiAutomaton& automaton, const LassoTimedWord& word) {
  WordProduct product(automaton, word);
  // The product is finite and small; no budget needed.
  auto result = search::find_accepting_lasso(product, std::numeric_limits<std::size_t>::max());
  return result.verdict == search::Emptiness::NonEmpty;
}

} // namespace mitlplan::tba
