#include "mitlplan/tba/automaton.hpp"

#include <algorithm>
#include <functional>

namespace mitlplan::tba {

namespace {

void check_clocks(const ClockConstraint& c, std::size_t clock_count, const std::string& where) {
  std::function<void(const ClockConstraint&)> walk = [&](const ClockConstraint& n) {
    switch (n.kind()) {
    case ClockConstraint::Kind::True:
      return;
    case ClockConstraint::Kind::Not:
      walk(n.operand());
      return;
    case ClockConstraint::Kind::And:
      walk(n.lhs());
      walk(n.rhs());
      return;
    case ClockConstraint::Kind::Compare:
      if (n.clock() < 0 || static_cast<std::size_t>(n.clock()) >= clock_count)
        throw AutomatonError(where + " uses an undeclared clock");
      return;
    }
  };
  walk(c);
}

} // namespace

TimedBuchiAutomaton::TimedBuchiAutomaton(AtomSet alphabet, std::vector<std::string> clocks,
                                         std::vector<Location> locations, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), clocks_(std::move(clocks)), locations_(std::move(locations)),
      edges_(std::move(edges)) {
  outgoing_.resize(locations_.size());
  for (std::size_t i = 0; i < locations_.size(); ++i) {
    const auto& loc = locations_[i];
    if (!loc.label.subset_of(alphabet_))
      throw AutomatonError("location '" + loc.name + "' label " + loc.label.str() +
                           " is not within the alphabet " + alphabet_.str());
    check_clocks(loc.invariant, clocks_.size(), "invariant of '" + loc.name + "'");
    cmax_ = max(cmax_, loc.invariant.largest_constant());
    if (loc.initial)
      initial_.push_back(i);
  }
  if (initial_.empty())
    throw AutomatonError("automaton has no initial location");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.from >= locations_.size() || edge.to >= locations_.size())
      throw AutomatonError("edge endpoint out of range");
    const std::string where =
        "edge " + locations_[edge.from].name + " -> " + locations_[edge.to].name;
    check_clocks(edge.guard, clocks_.size(), "guard of " + where);
    for (int r : edge.resets)
      if (r < 0 || static_cast<std::size_t>(r) >= clocks_.size())
        throw AutomatonError(where + " resets an undeclared clock");
    cmax_ = max(cmax_, edge.guard.largest_constant());
    outgoing_[edge.from].push_back(e);
  }
}

std::size_t TimedBuchiAutomaton::find_location(const std::string& name) const {
  for (std::size_t i = 0; i < locations_.size(); ++i)
    if (locations_[i].name == name)
      return i;
  throw AutomatonError("unknown location '" + name + "'");
}

TimedBuchiAutomaton TimedBuchiAutomaton::scaled(const Rational& factor) const {
  auto locations = locations_;
  for (auto& l : locations)
    l.invariant = l.invariant.scaled(factor);
  auto edges = edges_;
  for (auto& e : edges)
    e.guard = e.guard.scaled(factor);
  return TimedBuchiAutomaton(alphabet_, clocks_, std::move(locations), std::move(edges));
}

std::vector<Rational> TimedBuchiAutomaton::constants() const {
  std::vector<Rational> out;
  for (const auto& l : locations_)
    l.invariant.collect_constants(out);
  for (const auto& e : edges_)
    e.guard.collect_constants(out);
  return out;
}

bool step(const TimedBuchiAutomaton& a, const Valuation& v, const Edge& edge, const Rational& delay,
          Valuation& out) {
  if (!edge.guard.holds(v))
    return false;
  out.resize(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_infinite()) {
      out[c] = v[c];
      continue;
    }
    const Rational next = v[c].value() + delay;
    out[c] = next > a.cmax() ? TimeValue::infinity() : TimeValue(next);
  }
  for (int r : edge.resets)
    out[static_cast<std::size_t>(r)] = TimeValue(Rational(0));
  return a.locations()[edge.to].invariant.holds(out);
}

Valuation zero_valuation(const TimedBuchiAutomaton& a) {
  return Valuation(a.clock_count(), TimeValue(Rational(0)));
}

namespace {

TimedBuchiAutomaton single_mode(const AtomSet& alphabet, bool accepting) {
  std::vector<Location> locations;
  for (const auto& letter : all_letters(alphabet))
    locations.push_back({"all" + letter.str(), letter, {}, accepting, true});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < locations.size(); ++i)
    for (std::size_t j = 0; j < locations.size(); ++j)
      edges.push_back({i, j, {}, {}});
  return TimedBuchiAutomaton(alphabet, {}, std::move(locations), std::move(edges));
}

} // namespace

TimedBuchiAutomaton universal_automaton(const AtomSet& alphabet) { return single_mode(alphabet, true); }

TimedBuchiAutomaton empty_automaton(const AtomSet& alphabet) { return single_mode(alphabet, false); }

} // namespace mitlplan::tba
