#pragma once

// JSON, CSV and SVG renderings of plans and collective runs. Times are
// always exact rational strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "mitlplan/search/plan.hpp"
#include "mitlplan/wts/io.hpp"
#include "mitlplan/wts/runs.hpp"

namespace mitlplan::cli {

nlohmann::json verdict_to_json(const search::Verdict& v);

/// {"agents", "prefix": [{time, states, advanced, atoms}], "cycle", "period"}.
/// One entry per collective event.
nlohmann::json collective_to_json(const std::vector<wts::WeightedTransitionSystem>& systems,
                                  const wts::CollectiveRun& run, const LassoTimedWord& word);

/// Full plan.json document. "runs" uses the runs-file schema, so the file
/// can be handed straight back to `check --runs`.
nlohmann::json plan_to_json(const std::vector<wts::WeightedTransitionSystem>& systems,
                            const search::PlanResult& result);

// Both take the "collective" object above, so they depend only on it.
std::string trace_csv(const nlohmann::json& collective);
std::string timeline_svg(const nlohmann::json& collective);

} // namespace mitlplan::cli
