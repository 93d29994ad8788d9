#include "mitlplan/wts/runs.hpp"

#include <map>
#include <utility>

namespace mitlplan::wts {

void validate_run(const WeightedTransitionSystem& system, const TimedRun& run) {
  auto fail = [&](const std::string& what) { throw RunError("run of '" + system.name() + "': " + what); };
  if (!run.time_at(0).is_zero())
    fail("must start at time 0, starts at " + run.time_at(0).str());
  for (std::size_t i = 0; i < run.prefix_length() + run.cycle_length(); ++i)
    if (run.value_at(i) >= system.state_count())
      fail("state id out of range");
  if (!system.is_initial(run.value_at(0)))
    fail("first state " + system.state_name(run.value_at(0)) + " is not initial");
  // Every step of prefix and cycle plus the wrap-around.
  for (std::size_t i = 0; i < run.prefix_length() + run.cycle_length(); ++i) {
    const StateId a = run.value_at(i), b = run.value_at(i + 1);
    const auto w = system.weight(a, b);
    if (!w)
      fail("no transition " + system.state_name(a) + " -> " + system.state_name(b));
    const Rational step = run.time_at(i + 1) - run.time_at(i);
    if (step != *w)
      fail("step " + system.state_name(a) + " -> " + system.state_name(b) + " takes " + step.str() +
           " but the transition weight is " + w->str());
  }
}

LassoTimedWord timed_word_of(const WeightedTransitionSystem& system, const TimedRun& run) {
  validate_run(system, run);
  return run.map([&](const StateId& s) { return system.label(s); });
}

CollectiveRun collective_run(const std::vector<TimedRun>& runs) {
  if (runs.empty())
    throw RunError("collective run needs at least one agent");
  const std::size_t n = runs.size();
  for (const auto& r : runs)
    if (!r.time_at(0).is_zero())
      throw RunError("every run must start at time 0");

  using Key = std::vector<std::pair<std::size_t, Rational>>;
  std::map<Key, std::size_t> seen;
  std::vector<Stamped<StateVector>> positions;
  std::vector<std::vector<char>> masks;
  std::vector<std::size_t> index(n, 0);
  Rational now(0);

  auto current_key = [&] {
    Key key(n);
    for (std::size_t k = 0; k < n; ++k)
      key[k] = {runs[k].slot(index[k]), now - runs[k].time_at(index[k])};
    return key;
  };
  auto current_states = [&] {
    StateVector v(n);
    for (std::size_t k = 0; k < n; ++k)
      v[k] = runs[k].value_at(index[k]);
    return v;
  };

  seen.emplace(current_key(), 0);
  positions.push_back({current_states(), now});
  masks.emplace_back(n, 1);

  // Each agent has finitely many (slot, residue) pairs, so this terminates;
  // the cap only guards against pathological inputs.
  constexpr std::size_t cap = 20'000'000;
  while (positions.size() < cap) {
    Rational next = runs[0].time_at(index[0] + 1);
    for (std::size_t k = 1; k < n; ++k)
      next = min(next, runs[k].time_at(index[k] + 1));
    std::vector<char> mask(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      if (runs[k].time_at(index[k] + 1) == next) {
        ++index[k];
        mask[k] = 1;
      }
    now = next;
    auto [it, inserted] = seen.emplace(current_key(), positions.size());
    if (!inserted) {
      const std::size_t start = it->second;
      std::vector<Stamped<StateVector>> prefix(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<Stamped<StateVector>> cycle(positions.begin() + static_cast<std::ptrdiff_t>(start), positions.end());
      const Rational period = now - positions[start].time;
      return CollectiveRun{Lasso<StateVector>(std::move(prefix), std::move(cycle), period), std::move(masks)};
    }
    positions.push_back({current_states(), now});
    masks.push_back(std::move(mask));
  }
  throw RunError("collective run did not close a cycle within the position cap");
}

LassoTimedWord collective_word_of(const std::vector<WeightedTransitionSystem>& systems,
                                  const CollectiveRun& run) {
  check_disjoint_atoms(systems);
  return run.states.map([&](const StateVector& v) {
    if (v.size() != systems.size())
      throw RunError("collective state has " + std::to_string(v.size()) + " components for " +
                     std::to_string(systems.size()) + " systems");
    AtomSet letter;
    for (std::size_t k = 0; k < v.size(); ++k)
      letter = letter.united(systems[k].label(v[k]));
    return letter;
  });
}

TimedRun project(const CollectiveRun& run, std::size_t agent) {
  const auto& lasso = run.states;
  std::vector<Stamped<StateId>> prefix, cycle;
  for (std::size_t i = 0; i < lasso.prefix_length(); ++i)
    if (run.advanced[i][agent])
      prefix.push_back({lasso.prefix()[i].value[agent], lasso.prefix()[i].time});
  for (std::size_t i = 0; i < lasso.cycle_length(); ++i)
    if (run.advanced[lasso.prefix_length() + i][agent])
      cycle.push_back({lasso.cycle()[i].value[agent], lasso.cycle()[i].time});
  if (cycle.empty())
    throw RunError("agent " + std::to_string(agent) + " never moves in the collective cycle");
  return TimedRun(std::move(prefix), std::move(cycle), lasso.period()).canonical();
}

} // namespace mitlplan::wts
