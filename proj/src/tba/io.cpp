#include "mitlplan/tba/io.hpp"

#include <algorithm>
#include <fstream>

namespace mitlplan::tba {

using nlohmann::json;

namespace {

AtomSet atoms_of(const json& j) {
  if (!j.is_array())
    throw TbaFormatError("expected an array of atom names, got " + j.dump());
  return AtomSet(j.get<std::vector<std::string>>());
}

std::string constraint_text(const json& obj, const char* key) {
  if (!obj.contains(key) || obj[key].is_null())
    return "true";
  if (obj[key].is_boolean())
    return obj[key].get<bool>() ? "true" : "false";
  return obj[key].get<std::string>();
}

} // namespace

TimedBuchiAutomaton tba_from_json(const json& doc) {
  try {
    const auto clocks = doc.value("clocks", std::vector<std::string>{});
    std::vector<Location> locations;
    AtomSet alphabet;
    for (const auto& l : doc.at("locations")) {
      Location loc;
      loc.name = l.at("name").get<std::string>();
      loc.label = atoms_of(l.value("label", json::array()));
      loc.invariant = parse_constraint(constraint_text(l, "invariant"), clocks);
      loc.accepting = l.value("accepting", false);
      loc.initial = l.value("initial", false);
      alphabet = alphabet.united(loc.label);
      locations.push_back(std::move(loc));
    }
    if (doc.contains("atoms"))
      alphabet = atoms_of(doc["atoms"]);

    auto index_of = [&](const std::string& name) {
      for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == name)
          return i;
      throw TbaFormatError("edge refers to unknown location '" + name + "'");
    };
    std::vector<Edge> edges;
    for (const auto& e : doc.value("edges", json::array())) {
      Edge edge;
      edge.from = index_of(e.at("from").get<std::string>());
      edge.to = index_of(e.at("to").get<std::string>());
      edge.guard = parse_constraint(constraint_text(e, "guard"), clocks);
      for (const auto& r : e.value("resets", std::vector<std::string>{})) {
        auto it = std::find(clocks.begin(), clocks.end(), r);
        if (it == clocks.end())
          throw TbaFormatError("edge resets undeclared clock '" + r + "'");
        edge.resets.push_back(static_cast<int>(it - clocks.begin()));
      }
      edges.push_back(std::move(edge));
    }
    return TimedBuchiAutomaton(alphabet, clocks, std::move(locations), std::move(edges));
  } catch (const json::exception& e) {
    throw TbaFormatError(std::string("malformed TBA document: ") + e.what());
  } catch (const ConstraintParseError& e) {
    throw TbaFormatError(e.what());
  } catch (const AutomatonError& e) {
    throw TbaFormatError(e.what());
  }
}

json tba_to_json(const TimedBuchiAutomaton& a) {
  json doc;
  doc["clocks"] = a.clocks();
  doc["atoms"] = a.alphabet().atoms();
  json locations = json::array();
  for (const auto& l : a.locations())
    locations.push_back({{"name", l.name},
                         {"label", l.label.atoms()},
                         {"invariant", l.invariant.str(a.clocks())},
                         {"accepting", l.accepting},
                         {"initial", l.initial}});
  doc["locations"] = std::move(locations);
  json edges = json::array();
  for (const auto& e : a.edges()) {
    std::vector<std::string> resets;
    for (int r : e.resets)
      resets.push_back(a.clocks()[static_cast<std::size_t>(r)]);
    edges.push_back({{"from", a.locations()[e.from].name},
                     {"to", a.locations()[e.to].name},
                     {"guard", e.guard.str(a.clocks())},
                     {"resets", resets}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

TimedBuchiAutomaton load_tba(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw TbaFormatError("cannot open TBA file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw TbaFormatError("TBA file " + path.string() + " is not valid JSON: " + e.what());
  }
  return tba_from_json(doc);
}

} // namespace mitlplan::tba
