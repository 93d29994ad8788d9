#include "mitlplan/product/global.hpp"

#include "mitlplan/tba/membership.hpp"

namespace mitlplan::product {

std::size_t GlobalProduct::Hash::operator()(const State& s) const {
  std::size_t seed = s.team;
  hash_combine(seed, s.location);
  hash_combine(seed, s.flag);
  for (const auto& v : s.clocks)
    hash_combine(seed, v.hash());
  return seed;
}

GlobalProduct::GlobalProduct(TeamProduct& team, tba::TimedBuchiAutomaton automaton)
    : team_(team), automaton_(std::move(automaton)) {
  AtomSet owned;
  for (std::size_t k = 0; k < team_.agent_count(); ++k)
    owned = owned.united(team_.local(k).system().atoms());
  if (!automaton_.alphabet().subset_of(owned))
    throw ProductError("team automaton reads " + automaton_.alphabet().str() + " but the agents own only " +
                       owned.str());
}

std::vector<std::size_t> GlobalProduct::initial_states() {
  if (initialized_)
    return initial_;
  initialized_ = true;
  const tba::Valuation zero = tba::zero_valuation(automaton_);
  for (std::size_t t : team_.initial_states())
    for (std::size_t l : automaton_.initial_locations())
      if (tba::label_matches(automaton_, l, team_.letter(t)) && automaton_.locations()[l].invariant.holds(zero))
        initial_.push_back(states_.intern({t, l, zero, 1}).first);
  return initial_;
}

bool GlobalProduct::accepting(std::size_t id) const {
  const State& s = states_.at(id);
  return s.flag == 1 && team_.accepting(s.team);
}

const std::vector<search::WeightedEdge>& GlobalProduct::successors(std::size_t id) {
  if (cache_.has(id))
    return cache_.get(id);
  const State from = states_.at(id);
  std::uint8_t flag = from.flag;
  if (flag == 1 && team_.accepting(from.team))
    flag = 2;
  else if (flag == 2 && automaton_.locations()[from.location].accepting)
    flag = 1;

  std::vector<search::WeightedEdge> out;
  tba::Valuation clocks;
  // Copy: the team's cache may grow while we look up letters.
  const std::vector<search::WeightedEdge> team_edges = team_.successors(from.team);
  for (const auto& te : team_edges) {
    const AtomSet& letter = team_.letter(te.target);
    for (std::size_t e : automaton_.outgoing(from.location)) {
      const auto& edge = automaton_.edges()[e];
      if (!tba::label_matches(automaton_, edge.to, letter))
        continue;
      if (!tba::step(automaton_, from.clocks, edge, te.weight, clocks))
        continue;
      out.push_back({states_.intern({te.target, edge.to, clocks, flag}).first, te.weight});
    }
  }
  return cache_.put(id, std::move(out));
}

LayerStats GlobalProduct::stats() const {
  LayerStats s{states_.size(), cache_.edge_count(), 0};
  for (std::size_t id = 0; id < states_.size(); ++id)
    s.accepting += accepting(id) ? 1 : 0;
  return s;
}

} // namespace mitlplan::product
