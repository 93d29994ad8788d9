#include "mitlplan/search/problem.hpp"

#include "mitlplan/mitl/parser.hpp"
#include "mitlplan/tba/io.hpp"

namespace mitlplan::search {

namespace {

Specification spec_of(const std::optional<std::string>& formula, const std::optional<std::filesystem::path>& tba) {
  Specification s;
  if (formula)
    s.formula = mitl::parse_formula(*formula);
  else if (tba)
    s.automaton = tba::load_tba(*tba);
  return s;
}

} // namespace

PlanningProblem problem_from_model(const wts::Model& model, const std::map<std::string, std::string>& overrides) {
  PlanningProblem p;
  std::size_t used = 0;
  for (const auto& a : model.agents) {
    auto formula = a.formula;
    auto tba = a.tba;
    if (auto it = overrides.find(a.system.name()); it != overrides.end()) {
      formula = it->second;
      tba.reset();
      ++used;
    }
    p.agents.push_back({a.system, spec_of(formula, tba)});
  }
  auto formula = model.global_formula;
  auto tba = model.global_tba;
  for (const char* key : {"team", "global"})
    if (auto it = overrides.find(key); it != overrides.end()) {
      formula = it->second;
      tba.reset();
      ++used;
    }
  if (used != overrides.size())
    for (const auto& [name, text] : overrides) {
      bool known = name == "team" || name == "global";
      for (const auto& a : model.agents)
        known = known || a.system.name() == name;
      if (!known)
        throw ProblemError("formula given for unknown agent '" + name + "'");
    }
  p.team = spec_of(formula, tba);
  return p;
}

} // namespace mitlplan::search
