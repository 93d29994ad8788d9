#include "mitlplan/product/local.hpp"

#include <algorithm>
#include <tuple>

#include "mitlplan/tba/membership.hpp"

namespace mitlplan::product {

const std::vector<search::WeightedEdge>& EdgeCache::put(std::size_t id, std::vector<search::WeightedEdge> edges) {
  if (id >= done_.size()) {
    done_.resize(id + 1, 0);
    edges_.resize(id + 1);
  }
  count_ += edges.size();
  edges_[id] = std::move(edges);
  done_[id] = 1;
  return edges_[id];
}

std::size_t LocalProduct::Hash::operator()(const State& s) const {
  std::size_t seed = s.region;
  hash_combine(seed, s.location);
  for (const auto& v : s.clocks)
    hash_combine(seed, v.hash());
  return seed;
}

LocalProduct::LocalProduct(wts::WeightedTransitionSystem system, tba::TimedBuchiAutomaton automaton)
    : system_(std::move(system)), automaton_(std::move(automaton)) {
  if (!automaton_.alphabet().subset_of(system_.atoms()))
    throw ProductError("automaton for '" + system_.name() + "' reads " + automaton_.alphabet().str() + " but the agent owns only " + system_.atoms().str());
  const tba::Valuation zero = tba::zero_valuation(automaton_);
  for (wts::StateId r : system_.initial())
    for (std::size_t l : automaton_.initial_locations())
      if (tba::label_matches(automaton_, l, system_.label(r)) && automaton_.locations()[l].invariant.holds(zero))
        initial_.push_back(states_.intern({r, l, zero}).first);
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
}

const std::vector<search::WeightedEdge>& LocalProduct::successors(std::size_t id) {
  if (cache_.has(id))
    return cache_.get(id);
  const State from = states_.at(id);
  std::vector<std::pair<State, Rational>> next;
  tba::Valuation clocks;
  for (std::size_t t : system_.outgoing(from.region)) {
    const auto& tr = system_.transitions()[t];
    for (std::size_t e : automaton_.outgoing(from.location)) {
      const auto& edge = automaton_.edges()[e];
      if (!tba::label_matches(automaton_, edge.to, system_.label(tr.to)))
        continue;
      if (!tba::step(automaton_, from.clocks, edge, tr.weight, clocks))
        continue;
      next.push_back({State{tr.to, edge.to, clocks}, tr.weight});
    }
  }
  // Deterministic order: region, then location, then clocks.
  std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.region, a.first.location, a.first.clocks) <
           std::tie(b.first.region, b.first.location, b.first.clocks);
  });
  next.erase(std::unique(next.begin(), next.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             next.end());
  std::vector<search::WeightedEdge> out;
  out.reserve(next.size());
  for (auto& [s, w] : next)
    out.push_back({states_.intern(s).first, w});
  return cache_.put(id, std::move(out));
}

const Rational& LocalProduct::edge_weight(std::size_t id, std::size_t target) {
  for (const auto& e : successors(id))
    if (e.target == target)
      return e.weight;
  throw ProductError("no local edge between the given states");
}

LayerStats LocalProduct::stats() const {
  LayerStats s{states_.size(), cache_.edge_count(), 0};
  for (std::size_t id = 0; id < states_.size(); ++id)
    s.accepting += accepting(id) ? 1 : 0;
  return s;
}

} // namespace mitlplan::product
