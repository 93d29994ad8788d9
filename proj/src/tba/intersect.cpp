#include "mitlplan/tba/intersect.hpp"

#include <map>
#include <tuple>

namespace mitlplan::tba {

namespace {

bool compatible(const AtomSet& la, const AtomSet& alphabet_a, const AtomSet& lb, const AtomSet& alphabet_b) {
  return la.intersected(alphabet_b) == lb.intersected(alphabet_a);
}

} // namespace

TimedBuchiAutomaton intersect(const TimedBuchiAutomaton& a, const TimedBuchiAutomaton& b) {
  const int offset = static_cast<int>(a.clock_count());
  std::vector<std::string> clocks;
  for (const auto& c : a.clocks())
    clocks.push_back("a_" + c);
  for (const auto& c : b.clocks())
    clocks.push_back("b_" + c);

  using Key = std::tuple<std::size_t, std::size_t, int>;
  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  std::vector<Location> locations;
  std::vector<Edge> edges;

  auto location_of = [&](std::size_t la, std::size_t lb, int flag, bool initial) {
    const Key key{la, lb, flag};
    auto it = index.find(key);
    if (it != index.end()) {
      locations[it->second].initial = locations[it->second].initial || initial;
      return it->second;
    }
    const auto& x = a.locations()[la];
    const auto& y = b.locations()[lb];
    Location loc;
    loc.name = "(" + x.name + "," + y.name + "," + std::to_string(flag) + ")";
    loc.label = x.label.united(y.label);
    loc.invariant = ClockConstraint::conjunction(x.invariant, y.invariant.renamed(offset));
    loc.accepting = flag == 1 && x.accepting;
    loc.initial = initial;
    index.emplace(key, locations.size());
    keys.push_back(key);
    locations.push_back(std::move(loc));
    return locations.size() - 1;
  };

  for (std::size_t la : a.initial_locations())
    for (std::size_t lb : b.initial_locations())
      if (compatible(a.locations()[la].label, a.alphabet(), b.locations()[lb].label, b.alphabet()))
        location_of(la, lb, 1, true);

  if (locations.empty())
    return empty_automaton(a.alphabet().united(b.alphabet()));

  for (std::size_t next = 0; next < keys.size(); ++next) {
    const auto [la, lb, flag] = keys[next];
    int flag2 = flag;
    if (flag == 1 && a.locations()[la].accepting)
      flag2 = 2;
    else if (flag == 2 && b.locations()[lb].accepting)
      flag2 = 1;
    for (std::size_t ea : a.outgoing(la))
      for (std::size_t eb : b.outgoing(lb)) {
        const Edge& x = a.edges()[ea];
        const Edge& y = b.edges()[eb];
        if (!compatible(a.locations()[x.to].label, a.alphabet(), b.locations()[y.to].label, b.alphabet()))
          continue;
        const std::size_t target = location_of(x.to, y.to, flag2, false);
        Edge e;
        e.from = next;
        e.to = target;
        e.guard = ClockConstraint::conjunction(x.guard, y.guard.renamed(offset));
        e.resets = x.resets;
        for (int r : y.resets)
          e.resets.push_back(r + offset);
        edges.push_back(std::move(e));
      }
  }
  return TimedBuchiAutomaton(a.alphabet().united(b.alphabet()), std::move(clocks), std::move(locations),
                             std::move(edges));
}

} // namespace mitlplan::tba
