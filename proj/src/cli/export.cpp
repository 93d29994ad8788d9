#include "mitlplan/cli/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mitlplan::cli {

using nlohmann::json;

json verdict_to_json(const search::Verdict& v) {
  json j{{"subject", v.subject}, {"method", v.method}, {"spec", v.spec}, {"holds", v.holds}};
  if (v.violation)
    j["violation_position"] = *v.violation;
  if (v.violation_time)
    j["violation_time"] = v.violation_time->str();
  return j;
}

json collective_to_json(const std::vector<wts::WeightedTransitionSystem>& systems, const wts::CollectiveRun& run,
                        const LassoTimedWord& word) {
  json agents = json::array();
  for (const auto& s : systems)
    agents.push_back(s.name());
  auto events = [&](std::size_t from, std::size_t to) {
    json out = json::array();
    for (std::size_t i = from; i < to; ++i) {
      const auto& vec = run.states.value_at(i);
      json states = json::array(), advanced = json::array();
      for (std::size_t k = 0; k < systems.size(); ++k) {
        states.push_back(systems[k].state_name(vec[k]));
        advanced.push_back(run.agent_advanced(i, k));
      }
      out.push_back({{"time", run.states.time_at(i).str()},
                     {"states", std::move(states)},
                     {"advanced", std::move(advanced)},
                     {"atoms", word.value_at(i).atoms()}});
    }
    return out;
  };
  const std::size_t p = run.states.prefix_length();
  return {{"agents", std::move(agents)},
          {"prefix", events(0, p)},
          {"cycle", events(p, p + run.states.cycle_length())},
          {"period", run.states.period().str()}};
}

json plan_to_json(const std::vector<wts::WeightedTransitionSystem>& systems, const search::PlanResult& result) {
  json j{{"status", search::status_name(result.status)}};
  if (!result.reason.empty())
    j["reason"] = result.reason;
  if (const auto& b = result.bundle) {
    json runs = json::array();
    for (std::size_t k = 0; k < systems.size(); ++k)
      runs.push_back(wts::run_to_json(systems[k], b->runs[k]));
    j["runs"] = std::move(runs);
    j["collective"] = collective_to_json(systems, b->collective, b->collective_word);
    json verdicts = json::array();
    for (const auto& v : b->verdicts)
      verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(verdicts);
  }
  auto layer = [](const product::LayerStats& s) {
    return json{{"states", s.states}, {"edges", s.edges}, {"accepting", s.accepting}};
  };
  json local = json::array();
  for (const auto& s : result.stats.local)
    local.push_back(layer(s));
  j["stats"] = {{"scale_factor", result.stats.scale_factor.str()},
                {"states_visited", result.stats.states_visited},
                {"seconds", result.stats.seconds},
                {"local", std::move(local)},
                {"team", layer(result.stats.team)},
                {"global", layer(result.stats.global)}};
  return j;
}

namespace {

// Prefix rows then cycle rows, each tagged with its segment.
std::vector<std::pair<const json*, const char*>> rows_of(const json& collective) {
  std::vector<std::pair<const json*, const char*>> rows;
  for (const auto& e : collective.at("prefix"))
    rows.push_back({&e, "prefix"});
  for (const auto& e : collective.at("cycle"))
    rows.push_back({&e, "cycle"});
  return rows;
}

std::string join(const json& atoms, const char* sep) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty())
      out += sep;
    out += a.get<std::string>();
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

std::string trace_csv(const json& collective) {
  std::ostringstream os;
  os << "time";
  for (const auto& a : collective.at("agents"))
    os << ',' << csv_field(a.get<std::string>());
  os << ",atoms,segment\n";
  for (const auto& [e, segment] : rows_of(collective)) {
    os << e->at("time").get<std::string>();
    for (const auto& s : e->at("states"))
      os << ',' << csv_field(s.get<std::string>());
    os << ',' << csv_field(join(e->at("atoms"), " ")) << ',' << segment << '\n';
  }
  return os.str();
}

std::string timeline_svg(const json& collective) {
  const auto rows = rows_of(collective);
  const auto& agents = collective.at("agents");
  std::vector<Rational> times;
  for (const auto& r : rows)
    times.push_back(Rational::parse(r.first->at("time").get<std::string>()));
  const std::size_t p = collective.at("prefix").size();
  const Rational cycle_start = times.at(p);
  const Rational end = cycle_start + Rational::parse(collective.at("period").get<std::string>());

  const double left = 90, top = 40, lane = 44, bar = 26;
  const double span = std::max(end.to_double(), 1e-9);
  const double unit = std::min(60.0, 1200.0 / span);
  const double width = left + span * unit + 40;
  const double height = top + lane * static_cast<double>(agents.size()) + 70;
  auto x = [&](const Rational& t) { return fmt(left + t.to_double() * unit); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
  // Shade the repeating part.
  os << "<rect x=\"" << x(cycle_start) << "\" y=\"" << fmt(top - 14) << "\" width=\""
     << fmt((end - cycle_start).to_double() * unit) << "\" height=\""
     << fmt(lane * static_cast<double>(agents.size()) + 14) << "\" fill=\"#eef3ff\"/>\n";
  os << "<text x=\"" << x(cycle_start) << "\" y=\"" << fmt(top - 18) << "\">cycle (period "
     << xml_escape(collective.at("period").get<std::string>()) << ")</text>\n";

  static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                  "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const double y = top + lane * static_cast<double>(k);
    os << "<text x=\"8\" y=\"" << fmt(y + bar / 2 + 4) << "\">" << xml_escape(agents[k].get<std::string>())
       << "</text>\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& e = *rows[i].first;
      const Rational to = i + 1 < rows.size() ? times[i + 1] : end;
      const std::string state = e.at("states").at(k).get<std::string>();
      std::size_t colour = 0; // stable across platforms, unlike std::hash
      for (unsigned char c : state)
        colour = colour * 31 + c;
      colour %= std::size(palette);
      os << "<rect x=\"" << x(times[i]) << "\" y=\"" << fmt(y) << "\" width=\""
         << fmt((to - times[i]).to_double() * unit) << "\" height=\"" << fmt(bar) << "\" fill=\"" << palette[colour]
         << "\" stroke=\"#555\" stroke-width=\"0.5\"/>\n";
      if (e.at("advanced").at(k).get<bool>())
        os << "<text x=\"" << fmt(left + times[i].to_double() * unit + 2) << "\" y=\"" << fmt(y + bar / 2 + 4)
           << "\">" << xml_escape(state) << "</text>\n";
    }
  }

  // Time axis with one tick per event, atoms underneath.
  const double axis = top + lane * static_cast<double>(agents.size()) + 4;
  os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(axis) << "\" x2=\"" << x(end) << "\" y2=\"" << fmt(axis)
     << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& e = *rows[i].first;
    os << "<line x1=\"" << x(times[i]) << "\" y1=\"" << fmt(axis) << "\" x2=\"" << x(times[i]) << "\" y2=\""
       << fmt(axis + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << x(times[i]) << "\" y=\"" << fmt(axis + 17) << "\" text-anchor=\"middle\">"
       << xml_escape(e.at("time").get<std::string>()) << "</text>\n";
    const std::string atoms = join(e.at("atoms"), ",");
    if (!atoms.empty())
      os << "<text x=\"" << x(times[i]) << "\" y=\"" << fmt(axis + 31) << "\" text-anchor=\"middle\" fill=\"#a00\">{"
         << xml_escape(atoms) << "}</text>\n";
  }
  os << "<text x=\"" << x(end) << "\" y=\"" << fmt(axis + 17) << "\" text-anchor=\"middle\" fill=\"#666\">"
     << end.str() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace mitlplan::cli
