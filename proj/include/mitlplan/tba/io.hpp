#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "mitlplan/tba/automaton.hpp"

namespace mitlplan::tba {

class TbaFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// JSON layout:
///   { "clocks": ["x"], "atoms": ["p"],            (atoms optional)
///     "locations": [{"name", "label": [..], "invariant": "x <= 6",
///                    "accepting": bool, "initial": bool}],
///     "edges": [{"from", "to", "guard": "x > 1", "resets": ["x"]}] }
/// Without "atoms" the alphabet is the union of all labels.
TimedBuchiAutomaton tba_from_json(const nlohmann::json& doc);
nlohmann::json tba_to_json(const TimedBuchiAutomaton& automaton);

TimedBuchiAutomaton load_tba(const std::filesystem::path& path);

} // namespace mitlplan::tba
