#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mitlplan/wts/runs.hpp"
#include "mitlplan/wts/system.hpp"

namespace mitlplan::wts {

class ModelFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AgentModel {
  WeightedTransitionSystem system;
  std::optional<std::string> formula;
  /// Hand-written TBA file, resolved against the model file's directory.
  std::optional<std::filesystem::path> tba;
};

struct Model {
  std::vector<AgentModel> agents;
  std::optional<std::string> global_formula;
  std::optional<std::filesystem::path> global_tba;
  /// Optional runs, one per agent in agent order.
  std::optional<std::vector<TimedRun>> runs;

  std::vector<WeightedTransitionSystem> systems() const;
  std::size_t agent_index(const std::string& name) const;
};

/// Rationals are written as strings ("7/10", "2.5") or JSON numbers.
Rational rational_from_json(const nlohmann::json& j);

/// Explicit agents:
///   {"agents": [{"name", "states": [..], "initial": [..],
///                "transitions": [{"from", "to", "weight": "7/10"}],
///                "labels": {"state": [atoms]}, "atoms": [..],
///                "formula": "F[<=6] a"  or  "tba": "file.json"}],
///    "formula": "...", "tba": "...", "runs": [...]}
/// or the grid shorthand
///   {"grid": {"rows", "cols"},
///    "agents": [{"name", "initial": "p4",
///                "moveWeights": {"up", "right", "down", "left"},
///                "labels": {...}, "formula": ...}], ...}
/// whose cells p1..p(rows*cols) are numbered row by row from the top left,
/// with moves between 4-neighbours.
Model model_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
Model load_model(const std::filesystem::path& path);

/// {"agent": name, "prefix": [{"state", "time"}], "cycle": [...], "period"}
nlohmann::json run_to_json(const WeightedTransitionSystem& system, const TimedRun& run);
TimedRun run_from_json(const WeightedTransitionSystem& system, const nlohmann::json& j);

/// Accepts either an array of runs or an object with a "runs" array; runs
/// are matched to agents by the "agent" field, or by order without it.
std::vector<TimedRun> runs_from_json(const std::vector<WeightedTransitionSystem>& systems,
                                     const nlohmann::json& doc);
std::vector<TimedRun> load_runs(const std::vector<WeightedTransitionSystem>& systems,
                                const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace mitlplan::wts
