#include "mitlplan/search/plan.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>

#include "mitlplan/core/scale.hpp"
#include "mitlplan/mitl/evaluator.hpp"
#include "mitlplan/product/global.hpp"
#include "mitlplan/product/team.hpp"
#include "mitlplan/tba/membership.hpp"
#include "mitlplan/tba/translate.hpp"

namespace mitlplan::search {

std::string Specification::describe() const {
  if (formula)
    return formula->str();
  if (automaton)
    return "automaton (" + std::to_string(automaton->locations().size()) + " locations)";
  return "true";
}

std::vector<wts::WeightedTransitionSystem> PlanningProblem::systems() const {
  std::vector<wts::WeightedTransitionSystem> out;
  for (const auto& a : agents)
    out.push_back(a.system);
  return out;
}

const char* status_name(PlanStatus status) {
  switch (status) {
  case PlanStatus::Success:
    return "SUCCESS";
  case PlanStatus::Unsatisfiable:
    return "UNSATISFIABLE";
  case PlanStatus::ExplorationLimit:
    return "EXPLORATION_LIMIT";
  }
  return "?";
}

bool PlanBundle::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

bool CheckReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

namespace {

AtomSet spec_atoms(const Specification& s) {
  if (s.formula)
    return s.formula->atoms();
  if (s.automaton)
    return s.automaton->alphabet();
  return {};
}

void validate(const PlanningProblem& problem) {
  if (problem.agents.empty())
    throw ProblemError("the problem has no agents");
  try {
    wts::check_disjoint_atoms(problem.systems());
  } catch (const wts::SystemError& e) {
    throw ProblemError(e.what());
  }
  AtomSet owned;
  for (const auto& a : problem.agents) {
    if (a.spec.formula && a.spec.automaton)
      throw ProblemError("agent '" + a.system.name() + "' has both a formula and an automaton");
    const AtomSet used = spec_atoms(a.spec);
    if (!used.subset_of(a.system.atoms()))
      throw ProblemError("specification of '" + a.system.name() + "' uses " + used.str() +
                         " but the agent owns only " + a.system.atoms().str());
    owned = owned.united(a.system.atoms());
  }
  if (problem.team.formula && problem.team.automaton)
    throw ProblemError("the team has both a formula and an automaton");
  const AtomSet used = spec_atoms(problem.team);
  if (!used.subset_of(owned))
    throw ProblemError("team specification uses " + used.str() + " but the agents own only " + owned.str());
}

std::vector<AtomSet> restricted(const std::vector<AtomSet>& letters, const AtomSet& alphabet) {
  std::set<AtomSet> out;
  for (const auto& l : letters)
    out.insert(l.intersected(alphabet));
  return {out.begin(), out.end()};
}

// Every union of one label per agent.
std::vector<AtomSet> team_letters(const std::vector<wts::WeightedTransitionSystem>& systems,
                                  const AtomSet& alphabet) {
  std::set<AtomSet> acc{AtomSet{}};
  for (const auto& s : systems) {
    std::set<AtomSet> next;
    for (const auto& l : restricted(s.distinct_labels(), alphabet))
      for (const auto& a : acc)
        next.insert(a.united(l));
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

// Automaton for a specification. `letters` lists what the subject can
// actually produce; it only shrinks the translation.
tba::TimedBuchiAutomaton automaton_for(const Specification& s, const std::vector<AtomSet>& letters) {
  if (s.automaton)
    return *s.automaton;
  if (!s.formula)
    return tba::universal_automaton(AtomSet{});
  tba::TranslateOptions opts;
  opts.alphabet = s.formula->atoms();
  opts.letters = restricted(letters, *opts.alphabet);
  return tba::translate_mitl(*s.formula, opts);
}

void collect_constants(const Specification& s, std::vector<Rational>& out) {
  if (s.formula)
    for (const auto& c : s.formula->constants())
      out.push_back(c);
  if (s.automaton)
    for (const auto& c : s.automaton->constants())
      out.push_back(c);
}

Specification scaled(const Specification& s, const Rational& f) {
  Specification out;
  if (s.formula)
    out.formula = s.formula->scaled(f);
  if (s.automaton)
    out.automaton = s.automaton->scaled(f);
  return out;
}

void add_verdicts(std::vector<Verdict>& out, const std::string& subject, const Specification& spec,
                  const LassoTimedWord& word, const std::optional<tba::TimedBuchiAutomaton>& automaton) {
  if (spec.formula) {
    Verdict v{subject, "formula", spec.formula->str(), mitl::satisfies(word, *spec.formula), {}, {}};
    if (!v.holds) {
      v.violation = mitl::first_violation(word, *spec.formula);
      if (v.violation)
        v.violation_time = word.time_at(*v.violation);
    }
    out.push_back(std::move(v));
  }
  if (automaton && (spec.formula || spec.automaton)) // nothing to say about "true"
    out.push_back({subject, "automaton", spec.describe(), tba::accepts_lasso(*automaton, word), {}, {}});
}

} // namespace

CheckReport check_runs(const PlanningProblem& problem, const std::vector<wts::TimedRun>& runs) {
  validate(problem);
  if (runs.size() != problem.agents.size())
    throw ProblemError("expected " + std::to_string(problem.agents.size()) + " runs, got " +
                       std::to_string(runs.size()));
  const auto systems = problem.systems();
  std::vector<LassoTimedWord> words;
  for (std::size_t k = 0; k < runs.size(); ++k)
    words.push_back(wts::timed_word_of(systems[k], runs[k]));
  auto collective = wts::collective_run(runs);
  auto collective_word = wts::collective_word_of(systems, collective);
  // Same verdict list as plan() produces, so a plan re-checks identically.
  // Formulas outside the fragment just get no automaton verdict.
  auto membership = [](const Specification& s, const std::vector<AtomSet>& letters)
      -> std::optional<tba::TimedBuchiAutomaton> {
    if (s.automaton || !s.formula || tba::in_translatable_fragment(*s.formula))
      return automaton_for(s, letters);
    return std::nullopt;
  };
  std::vector<Verdict> verdicts;
  for (std::size_t k = 0; k < runs.size(); ++k)
    add_verdicts(verdicts, systems[k].name(), problem.agents[k].spec, words[k],
                 membership(problem.agents[k].spec, systems[k].distinct_labels()));
  add_verdicts(verdicts, "team", problem.team, collective_word,
               membership(problem.team, team_letters(systems, spec_atoms(problem.team))));
  return CheckReport{std::move(words), std::move(collective), std::move(collective_word), std::move(verdicts)};
}

PlanResult plan(const PlanningProblem& problem, const PlanOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  validate(problem);
  const std::size_t n = problem.agents.size();
  PlanResult result;

  // Integer time constants keep clock values small and hashing exact.
  Rational factor(1);
  if (options.scale) {
    std::vector<Rational> constants;
    for (const auto& a : problem.agents) {
      for (const auto& t : a.system.transitions())
        constants.push_back(t.weight);
      collect_constants(a.spec, constants);
    }
    collect_constants(problem.team, constants);
    factor = Rational(denominator_lcm(constants));
  }
  result.stats.scale_factor = factor;

  std::vector<wts::WeightedTransitionSystem> systems;
  for (const auto& a : problem.agents)
    systems.push_back(a.system.scaled(factor));

  std::vector<std::unique_ptr<product::LocalProduct>> locals;
  std::vector<product::LocalProduct*> local_ptrs;
  for (std::size_t k = 0; k < n; ++k) {
    auto automaton = automaton_for(scaled(problem.agents[k].spec, factor), systems[k].distinct_labels());
    locals.push_back(std::make_unique<product::LocalProduct>(systems[k], std::move(automaton)));
    local_ptrs.push_back(locals.back().get());
  }
  product::TeamProduct team(local_ptrs);
  const AtomSet team_alphabet = spec_atoms(problem.team);
  product::GlobalProduct global(team, automaton_for(scaled(problem.team, factor), team_letters(systems, team_alphabet)));

  auto finish = [&] {
    for (const auto& l : locals)
      result.stats.local.push_back(l->stats());
    result.stats.team = team.stats();
    result.stats.global = global.stats();
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
  };

  for (std::size_t k = 0; k < n; ++k)
    if (locals[k]->initial_states().empty()) {
      result.reason = "no initial state of '" + systems[k].name() + "' matches its specification at time 0";
      return finish();
    }
  if (global.initial_states().empty()) {
    result.reason = "no initial team state matches the team specification at time 0";
    return finish();
  }

  const auto search = find_accepting_lasso(global, options.state_budget);
  result.stats.states_visited = search.states_visited;
  if (search.verdict == Emptiness::LimitExceeded) {
    result.status = PlanStatus::ExplorationLimit;
    result.reason = "state budget of " + std::to_string(options.state_budget) + " exhausted";
    return finish();
  }
  if (search.verdict == Emptiness::Empty) {
    result.reason = "no accepting lasso in the product";
    return finish();
  }

  // Peel the layers: global state -> team state -> each agent's arrivals.
  const AcceptingLasso& lasso = *search.lasso;
  std::vector<std::size_t> team_ids;
  std::vector<Rational> times;
  Rational now(0);
  for (std::size_t i = 0; i < lasso.prefix.size(); ++i) {
    team_ids.push_back(global.state(lasso.prefix[i]).team);
    times.push_back(now);
    now = now + lasso.prefix_weights[i];
  }
  const Rational cycle_start = now;
  for (std::size_t i = 0; i < lasso.cycle.size(); ++i) {
    team_ids.push_back(global.state(lasso.cycle[i]).team);
    times.push_back(now);
    now = now + lasso.cycle_weights[i];
  }
  const Rational period = now - cycle_start;

  std::vector<wts::TimedRun> runs;
  const Rational unscale = Rational(1) / factor;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Stamped<wts::StateId>> prefix, cycle;
    for (std::size_t i = 0; i < team_ids.size(); ++i) {
      if (!team.arrived(team_ids[i], k))
        continue;
      const auto& member = team.state(team_ids[i]).members[k];
      (i < lasso.prefix.size() ? prefix : cycle).push_back({locals[k]->state(member.local).region, times[i]});
    }
    if (cycle.empty())
      throw InternalError("agent '" + systems[k].name() + "' never arrives anywhere in the plan cycle");
    runs.push_back(wts::TimedRun(std::move(prefix), std::move(cycle), period).scaled(unscale).canonical());
  }

  // Re-validate on the original inputs.
  const auto originals = problem.systems();
  std::vector<LassoTimedWord> words;
  std::vector<Verdict> verdicts;
  std::optional<PlanBundle> bundle;
  try {
    for (std::size_t k = 0; k < n; ++k) {
      words.push_back(wts::timed_word_of(originals[k], runs[k]));
      const auto& spec = problem.agents[k].spec;
      add_verdicts(verdicts, originals[k].name(), spec, words[k],
                   automaton_for(spec, originals[k].distinct_labels()));
    }
    auto collective = wts::collective_run(runs);
    auto collective_word = wts::collective_word_of(originals, collective);
    add_verdicts(verdicts, "team", problem.team, collective_word,
                 automaton_for(problem.team, team_letters(originals, team_alphabet)));
    bundle = PlanBundle{std::move(runs), std::move(words), std::move(collective), std::move(collective_word),
                        std::move(verdicts)};
  } catch (const wts::RunError& e) {
    throw InternalError(std::string("projected run is invalid: ") + e.what());
  }
  for (const auto& v : bundle->verdicts)
    if (!v.holds)
      throw InternalError("synthesized plan fails " + v.method + " check of " + v.subject + ": " + v.spec);

  result.status = PlanStatus::Success;
  result.bundle = std::move(*bundle);
  return finish();
}

} // namespace mitlplan::search
