#include "mitlplan/product/team.hpp"

namespace mitlplan::product {

std::size_t TeamProduct::Hash::operator()(const State& s) const {
  std::size_t seed = s.turn;
  for (const auto& m : s.members) {
    hash_combine(seed, m.local);
    hash_combine(seed, m.target);
    hash_combine(seed, m.offset.hash());
  }
  return seed;
}

TeamProduct::TeamProduct(std::vector<LocalProduct*> locals) : locals_(std::move(locals)) {
  if (locals_.empty())
    throw ProductError("team product needs at least one agent");
}

std::vector<std::size_t> TeamProduct::initial_states() {
  // Cartesian product of the agents' initial states, first agent outermost.
  std::vector<std::vector<std::size_t>> options;
  for (auto* l : locals_) {
    options.push_back(l->initial_states());
    if (options.back().empty())
      return {};
  }
  std::vector<std::size_t> out;
  std::vector<std::size_t> pick(locals_.size(), 0);
  for (;;) {
    State s;
    for (std::size_t k = 0; k < locals_.size(); ++k)
      s.members.push_back({options[k][pick[k]], none, Rational(0)});
    out.push_back(states_.intern(s).first);
    std::size_t k = locals_.size();
    while (k-- > 0) {
      if (++pick[k] < options[k].size())
        break;
      pick[k] = 0;
    }
    if (k == std::numeric_limits<std::size_t>::max())
      return out;
  }
}

bool TeamProduct::accepting(std::size_t id) const {
  const State& s = states_.at(id);
  const std::size_t last = locals_.size() - 1;
  return s.turn == last && locals_[last]->accepting(s.members[last].local);
}

const std::vector<search::WeightedEdge>& TeamProduct::successors(std::size_t id) {
  if (cache_.has(id))
    return cache_.get(id);
  const State from = states_.at(id);
  const std::size_t n = locals_.size();

  // Agents at a boundary choose among their local edges; agents in flight
  // have exactly one option, their committed target.
  struct Option {
    std::size_t target;
    Rational duration;
  };
  std::vector<std::vector<Option>> options(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Member& m = from.members[k];
    if (m.target == none) {
      for (const auto& e : locals_[k]->successors(m.local))
        options[k].push_back({e.target, e.weight});
      if (options[k].empty())
        return cache_.put(id, {}); // this agent is stuck
    } else {
      options[k].push_back({m.target, locals_[k]->edge_weight(m.local, m.target)});
    }
  }

  std::size_t turn = from.turn;
  if (locals_[turn]->accepting(from.members[turn].local))
    turn = (turn + 1) % n;

  std::vector<search::WeightedEdge> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    Rational dmin = options[0][pick[0]].duration - from.members[0].offset;
    for (std::size_t k = 1; k < n; ++k)
      dmin = min(dmin, options[k][pick[k]].duration - from.members[k].offset);
    State to;
    to.turn = turn;
    to.members.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Option& o = options[k][pick[k]];
      const Rational reached = from.members[k].offset + dmin;
      if (reached == o.duration)
        to.members.push_back({o.target, none, Rational(0)});
      else
        to.members.push_back({from.members[k].local, o.target, reached});
    }
    out.push_back({states_.intern(to).first, dmin});

    std::size_t k = n;
    while (k-- > 0) {
      if (++pick[k] < options[k].size())
        break;
      pick[k] = 0;
    }
    if (k == std::numeric_limits<std::size_t>::max())
      break;
  }
  return cache_.put(id, std::move(out));
}

const AtomSet& TeamProduct::letter(std::size_t id) {
  if (id >= letter_done_.size()) {
    letter_done_.resize(id + 1 + id / 2, 0);
    letters_.resize(letter_done_.size());
  }
  if (!letter_done_[id]) {
    AtomSet l;
    const State& s = states_.at(id);
    for (std::size_t k = 0; k < locals_.size(); ++k) {
      const auto& local = *locals_[k];
      l = l.united(local.system().label(local.state(s.members[k].local).region));
    }
    letters_[id] = std::move(l);
    letter_done_[id] = 1;
  }
  return letters_[id];
}

LayerStats TeamProduct::stats() const {
  LayerStats s{states_.size(), cache_.edge_count(), 0};
  for (std::size_t id = 0; id < states_.size(); ++id)
    s.accepting += accepting(id) ? 1 : 0;
  return s;
}

} // namespace mitlplan::product
