#include "mitlplan/wts/io.hpp"

#include <fstream>
#include <map>

namespace mitlplan::wts {

using nlohmann::json;

std::vector<WeightedTransitionSystem> Model::systems() const {
  std::vector<WeightedTransitionSystem> out;
  for (const auto& a : agents)
    out.push_back(a.system);
  return out;
}

std::size_t Model::agent_index(const std::string& name) const {
  for (std::size_t k = 0; k < agents.size(); ++k)
    if (agents[k].system.name() == name)
      return k;
  throw ModelFormatError("no agent named '" + name + "'");
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string())
      return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
      return Rational(j.get<std::int64_t>());
    if (j.is_number())
      return Rational::parse(j.dump());
  } catch (const std::exception& e) {
    throw ModelFormatError(e.what());
  }
  throw ModelFormatError("expected a rational, got " + j.dump());
}

namespace {

AtomSet atoms_of(const json& j) {
  if (!j.is_array())
    throw ModelFormatError("expected an array of atoms, got " + j.dump());
  return AtomSet(j.get<std::vector<std::string>>());
}

std::vector<AtomSet> labels_of(const json& labels, const std::vector<std::string>& states,
                               const std::string& agent) {
  std::vector<AtomSet> out(states.size());
  if (labels.is_null())
    return out;
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    auto pos = std::find(states.begin(), states.end(), it.key());
    if (pos == states.end())
      throw ModelFormatError("agent '" + agent + "' labels unknown state '" + it.key() + "'");
    out[static_cast<std::size_t>(pos - states.begin())] = atoms_of(it.value());
  }
  return out;
}

AtomSet atoms_for(const json& agent, const std::vector<AtomSet>& labels) {
  if (agent.contains("atoms"))
    return atoms_of(agent["atoms"]);
  AtomSet all;
  for (const auto& l : labels)
    all = all.united(l);
  return all;
}

std::vector<std::string> initial_names(const json& j) {
  if (j.is_string())
    return {j.get<std::string>()};
  return j.get<std::vector<std::string>>();
}

WeightedTransitionSystem explicit_agent(const json& a) {
  const std::string name = a.at("name").get<std::string>();
  const auto states = a.at("states").get<std::vector<std::string>>();
  auto index = [&](const std::string& s) {
    auto pos = std::find(states.begin(), states.end(), s);
    if (pos == states.end())
      throw ModelFormatError("agent '" + name + "' refers to unknown state '" + s + "'");
    return static_cast<StateId>(pos - states.begin());
  };
  std::vector<StateId> initial;
  for (const auto& s : initial_names(a.at("initial")))
    initial.push_back(index(s));
  std::vector<Transition> transitions;
  for (const auto& t : a.value("transitions", json::array()))
    transitions.push_back({index(t.at("from").get<std::string>()), index(t.at("to").get<std::string>()),
                           rational_from_json(t.at("weight"))});
  auto labels = labels_of(a.value("labels", json()), states, name);
  AtomSet atoms = atoms_for(a, labels);
  return WeightedTransitionSystem(name, states, std::move(initial), std::move(transitions), std::move(atoms),
                                  std::move(labels));
}

WeightedTransitionSystem grid_agent(const json& a, int rows, int cols) {
  const std::string name = a.at("name").get<std::string>();
  std::vector<std::string> states;
  for (int i = 1; i <= rows * cols; ++i)
    states.push_back("p" + std::to_string(i));
  const auto& mw = a.at("moveWeights");
  const Rational up = rational_from_json(mw.at("up"));
  const Rational right = rational_from_json(mw.at("right"));
  const Rational down = rational_from_json(mw.at("down"));
  const Rational left = rational_from_json(mw.at("left"));
  std::vector<Transition> transitions;
  auto id = [&](int r, int c) { return static_cast<StateId>(r * cols + c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (r > 0)
        transitions.push_back({id(r, c), id(r - 1, c), up});
      if (r + 1 < rows)
        transitions.push_back({id(r, c), id(r + 1, c), down});
      if (c > 0)
        transitions.push_back({id(r, c), id(r, c - 1), left});
      if (c + 1 < cols)
        transitions.push_back({id(r, c), id(r, c + 1), right});
    }
  std::vector<StateId> initial;
  for (const auto& s : initial_names(a.at("initial"))) {
    auto pos = std::find(states.begin(), states.end(), s);
    if (pos == states.end())
      throw ModelFormatError("agent '" + name + "' starts in unknown cell '" + s + "'");
    initial.push_back(static_cast<StateId>(pos - states.begin()));
  }
  auto labels = labels_of(a.value("labels", json()), states, name);
  AtomSet atoms = atoms_for(a, labels);
  return WeightedTransitionSystem(name, states, std::move(initial), std::move(transitions), std::move(atoms),
                                  std::move(labels));
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (j.contains(key) && !j[key].is_null())
    return j[key].get<std::string>();
  return std::nullopt;
}

std::optional<std::filesystem::path> optional_path(const json& j, const char* key,
                                                   const std::filesystem::path& base) {
  auto s = optional_string(j, key);
  if (!s)
    return std::nullopt;
  std::filesystem::path p(*s);
  return p.is_absolute() || base.empty() ? p : base / p;
}

} // namespace

Model model_from_json(const json& doc, const std::filesystem::path& base_dir) {
  try {
    Model model;
    const bool grid = doc.contains("grid");
    const int rows = grid ? doc["grid"].at("rows").get<int>() : 0;
    const int cols = grid ? doc["grid"].at("cols").get<int>() : 0;
    if (grid && (rows <= 0 || cols <= 0))
      throw ModelFormatError("grid needs positive rows and cols");
    for (const auto& a : doc.at("agents")) {
      WeightedTransitionSystem system = grid ? grid_agent(a, rows, cols) : explicit_agent(a);
      model.agents.push_back({std::move(system), optional_string(a, "formula"), optional_path(a, "tba", base_dir)});
    }
    if (model.agents.empty())
      throw ModelFormatError("model has no agents");
    for (std::size_t i = 0; i < model.agents.size(); ++i)
      for (std::size_t j = i + 1; j < model.agents.size(); ++j)
        if (model.agents[i].system.name() == model.agents[j].system.name())
          throw ModelFormatError("two agents are named '" + model.agents[i].system.name() + "'");
    model.global_formula = optional_string(doc, "formula");
    model.global_tba = optional_path(doc, "tba", base_dir);
    if (doc.contains("runs"))
      model.runs = runs_from_json(model.systems(), doc["runs"]);
    return model;
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("malformed model: ") + e.what());
  } catch (const SystemError& e) {
    throw ModelFormatError(e.what());
  } catch (const RunError& e) {
    throw ModelFormatError(e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ModelFormatError("cannot open " + path.string());
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw ModelFormatError(path.string() + " is not valid JSON: " + e.what());
  }
}

Model load_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path), path.parent_path());
}

json run_to_json(const WeightedTransitionSystem& system, const TimedRun& run) {
  auto steps = [&](const std::vector<Stamped<StateId>>& part) {
    json out = json::array();
    for (const auto& s : part)
      out.push_back({{"state", system.state_name(s.value)}, {"time", s.time.str()}});
    return out;
  };
  return {{"agent", system.name()},
          {"prefix", steps(run.prefix())},
          {"cycle", steps(run.cycle())},
          {"period", run.period().str()}};
}

TimedRun run_from_json(const WeightedTransitionSystem& system, const json& j) {
  try {
    auto steps = [&](const json& part) {
      std::vector<Stamped<StateId>> out;
      for (const auto& s : part) {
        if (s.is_array())
          out.push_back({system.find_state(s.at(0).get<std::string>()), rational_from_json(s.at(1))});
        else
          out.push_back({system.find_state(s.at("state").get<std::string>()), rational_from_json(s.at("time"))});
      }
      return out;
    };
    TimedRun run(steps(j.value("prefix", json::array())), steps(j.at("cycle")), rational_from_json(j.at("period")));
    validate_run(system, run);
    return run;
  } catch (const json::exception& e) {
    throw ModelFormatError("malformed run for '" + system.name() + "': " + e.what());
  } catch (const LassoError& e) {
    throw ModelFormatError("run for '" + system.name() + "': " + e.what());
  } catch (const SystemError& e) {
    throw ModelFormatError(e.what());
  } catch (const RunError& e) {
    throw ModelFormatError(e.what());
  }
}

std::vector<TimedRun> runs_from_json(const std::vector<WeightedTransitionSystem>& systems, const json& doc) {
  const json& list = doc.is_object() ? doc.at("runs") : doc;
  if (!list.is_array())
    throw ModelFormatError("runs must be an array");
  if (list.size() != systems.size())
    throw ModelFormatError("expected " + std::to_string(systems.size()) + " runs, got " +
                           std::to_string(list.size()));
  std::vector<std::optional<TimedRun>> slots(systems.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::size_t k = i;
    if (list[i].contains("agent")) {
      const auto name = list[i]["agent"].get<std::string>();
      k = systems.size();
      for (std::size_t a = 0; a < systems.size(); ++a)
        if (systems[a].name() == name)
          k = a;
      if (k == systems.size())
        throw ModelFormatError("run for unknown agent '" + name + "'");
    }
    if (slots[k])
      throw ModelFormatError("two runs for agent '" + systems[k].name() + "'");
    slots[k] = run_from_json(systems[k], list[i]);
  }
  std::vector<TimedRun> out;
  for (auto& s : slots)
    out.push_back(std::move(*s));
  return out;
}

std::vector<TimedRun> load_runs(const std::vector<WeightedTransitionSystem>& systems,
                                const std::filesystem::path& path) {
  return runs_from_json(systems, read_json_file(path));
}

} // namespace mitlplan::wts
