#pragma once

#include <map>
#include <string>

#include "mitlplan/search/plan.hpp"
#include "mitlplan/wts/io.hpp"

namespace mitlplan::search {

/// Parses the formulas and loads the automata a model file refers to.
/// `overrides` replaces formulas by agent name; the key "team" (or
/// "global") replaces the team formula. Throws mitl::ParseError,
/// tba::TbaFormatError or ProblemError.
PlanningProblem problem_from_model(const wts::Model& model,
                                   const std::map<std::string, std::string>& overrides = {});

} // namespace mitlplan::search
