#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mitlplan/mitl/formula.hpp"
#include "mitlplan/product/local.hpp"
#include "mitlplan/search/emptiness.hpp"
#include "mitlplan/tba/automaton.hpp"
#include "mitlplan/wts/runs.hpp"
#include "mitlplan/wts/system.hpp"

namespace mitlplan::search {

/// A formula, a hand-written automaton, or neither (no constraint).
struct Specification {
  std::optional<mitl::Formula> formula;
  std::optional<tba::TimedBuchiAutomaton> automaton;

  std::string describe() const;
};

struct AgentProblem {
  wts::WeightedTransitionSystem system;
  Specification spec;
};

struct PlanningProblem {
  std::vector<AgentProblem> agents;
  Specification team;

  std::vector<wts::WeightedTransitionSystem> systems() const;
};

/// Thrown for inconsistent inputs: shared atoms between agents, formulas
/// over atoms nobody owns, and the like.
class ProblemError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A synthesized plan failed its own re-validation. Never expected.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct PlanOptions {
  std::size_t state_budget = default_state_budget;
  /// Multiply every time constant by the lcm of the denominators before
  /// building products, and divide the result back afterwards.
  bool scale = true;
};

enum class PlanStatus { Success, Unsatisfiable, ExplorationLimit };
const char* status_name(PlanStatus status);

struct Verdict {
  std::string subject; ///< agent name, or "team"
  std::string method;  ///< "formula" (direct evaluation) or "automaton" (membership)
  std::string spec;
  bool holds = false;
  /// First violating position of the subject's word, for failed formulas.
  std::optional<std::size_t> violation;
  std::optional<Rational> violation_time;
};

struct PlanBundle {
  std::vector<wts::TimedRun> runs;
  std::vector<LassoTimedWord> words;
  wts::CollectiveRun collective;
  LassoTimedWord collective_word;
  std::vector<Verdict> verdicts;

  bool all_hold() const;
};

struct PlanStats {
  std::vector<product::LayerStats> local;
  product::LayerStats team;
  product::LayerStats global;
  std::size_t states_visited = 0;
  Rational scale_factor{1};
  double seconds = 0;
};

struct PlanResult {
  PlanStatus status = PlanStatus::Unsatisfiable;
  std::optional<PlanBundle> bundle;
  PlanStats stats;
  std::string reason; ///< why there is no plan, when there is none
};

/// Builds the three product layers lazily, searches the outer one for an
/// accepting lasso and projects it back to one timed run per agent. The
/// runs are then re-checked on the original, unscaled inputs: every formula
/// by direct evaluation and every specification by automaton membership.
///
/// Throws ProblemError for invalid problems, tba::UnsupportedFragment for
/// formulas outside the translatable fragment and InternalError when a plan
/// fails re-validation.
PlanResult plan(const PlanningProblem& problem, const PlanOptions& options = {});

/// Evaluates every specification on given runs. Formulas are checked by
/// direct evaluation and, when translatable, also by automaton membership;
/// hand-written automata by membership only.
struct CheckReport {
  std::vector<LassoTimedWord> words;
  wts::CollectiveRun collective;
  LassoTimedWord collective_word;
  std::vector<Verdict> verdicts;

  bool all_hold() const;
};
CheckReport check_runs(const PlanningProblem& problem, const std::vector<wts::TimedRun>& runs);

} // namespace mitlplan::search
