#include "mitlplan/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "mitlplan/cli/export.hpp"
#include "mitlplan/mitl/parser.hpp"
#include "mitlplan/search/problem.hpp"
#include "mitlplan/tba/io.hpp"
#include "mitlplan/tba/translate.hpp"

namespace mitlplan::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string runs;
  std::vector<std::string> formulas;
  std::string out_dir;
  std::size_t state_budget = search::default_state_budget;
  bool no_scale = false;
  std::string formula_text; // translate only
};

std::map<std::string, std::string> overrides_of(const std::vector<std::string>& formulas) {
  std::map<std::string, std::string> out;
  for (const auto& f : formulas) {
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("--formula expects NAME=FORMULA, got '" + f + "'");
    if (!out.emplace(f.substr(0, eq), f.substr(eq + 1)).second)
      throw InputError("--formula given twice for '" + f.substr(0, eq) + "'");
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw InputError("cannot write " + path.string());
  f << text;
}

std::vector<wts::TimedRun> runs_for(const Options& o, const wts::Model& model) {
  if (!o.runs.empty())
    return wts::load_runs(model.systems(), o.runs);
  if (model.runs)
    return *model.runs;
  throw InputError("no runs: pass --runs or put a \"runs\" field in the model");
}

void print_verdict(std::ostream& out, const search::Verdict& v) {
  out << "  " << v.subject << " [" << v.method << "] " << v.spec << " : " << (v.holds ? "true" : "false");
  if (v.violation)
    out << " (first violation at position " << *v.violation << ", t=" << v.violation_time->str() << ")";
  out << '\n';
}

void write_trace(const fs::path& dir, const json& collective) {
  write_file(dir / "trace.csv", trace_csv(collective));
  write_file(dir / "timeline.svg", timeline_svg(collective));
}

int do_plan(const Options& o, std::ostream& out) {
  const auto model = wts::load_model(o.model);
  const auto problem = search::problem_from_model(model, overrides_of(o.formulas));
  search::PlanOptions po;
  po.state_budget = o.state_budget;
  po.scale = !o.no_scale;
  const auto result = search::plan(problem, po);
  const auto systems = problem.systems();
  const json doc = plan_to_json(systems, result);
  const fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
  write_file(dir / "plan.json", doc.dump(2) + "\n");
  if (result.bundle)
    write_trace(dir, doc.at("collective"));

  out << search::status_name(result.status);
  if (!result.reason.empty())
    out << ": " << result.reason;
  out << "\nstates visited: " << result.stats.states_visited << ", scale factor " << result.stats.scale_factor.str()
      << ", " << result.stats.seconds << " s\n";
  if (result.bundle) {
    for (std::size_t k = 0; k < systems.size(); ++k)
      out << "  " << systems[k].name() << ": " << wts::run_to_json(systems[k], result.bundle->runs[k]).dump() << '\n';
    out << "verdicts:\n";
    for (const auto& v : result.bundle->verdicts)
      print_verdict(out, v);
  }
  out << "wrote " << (dir / "plan.json").string() << '\n';
  switch (result.status) {
  case search::PlanStatus::Success:
    return exit_ok;
  case search::PlanStatus::Unsatisfiable:
    return exit_unsatisfiable;
  case search::PlanStatus::ExplorationLimit:
    return exit_limit;
  }
  return exit_internal;
}

int do_check(const Options& o, std::ostream& out) {
  auto model = wts::load_model(o.model);
  const auto runs = runs_for(o, model);
  // Explicit formulas replace the model's own.
  if (!o.formulas.empty()) {
    for (auto& a : model.agents) {
      a.formula.reset();
      a.tba.reset();
    }
    model.global_formula.reset();
    model.global_tba.reset();
  }
  const auto problem = search::problem_from_model(model, overrides_of(o.formulas));
  const auto report = search::check_runs(problem, runs);
  out << "verdicts:\n";
  for (const auto& v : report.verdicts)
    print_verdict(out, v);
  if (!o.out_dir.empty()) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts)
      verdicts.push_back(verdict_to_json(v));
    const json doc{{"verdicts", verdicts},
                   {"collective", collective_to_json(problem.systems(), report.collective, report.collective_word)}};
    write_file(fs::path(o.out_dir) / "check.json", doc.dump(2) + "\n");
  }
  return report.all_hold() ? exit_ok : exit_unsatisfiable;
}

int do_translate(const Options& o, std::ostream& out) {
  std::optional<mitl::Formula> parsed;
  try {
    parsed = mitl::parse_formula(o.formula_text);
  } catch (const mitl::ParseError& e) {
    // Punctual intervals parse fine grammatically but have no automaton here.
    if (e.kind() != mitl::ParseError::Kind::PunctualInterval)
      throw;
    throw tba::UnsupportedFragment(o.formula_text, e.what());
  }
  const auto& formula = *parsed;
  const auto automaton = tba::translate_mitl(formula);
  const std::string text = tba::tba_to_json(automaton).dump(2) + "\n";
  if (o.out_dir.empty()) {
    out << text;
  } else {
    const auto path = fs::path(o.out_dir) / "tba.json";
    write_file(path, text);
    out << automaton.locations().size() << " locations, " << automaton.clocks().size() << " clocks; wrote "
        << path.string() << '\n';
  }
  return exit_ok;
}

int do_simulate(const Options& o, std::ostream& out) {
  const auto model = wts::load_model(o.model);
  const auto runs = runs_for(o, model);
  const auto systems = model.systems();
  if (runs.size() != systems.size())
    throw InputError("expected " + std::to_string(systems.size()) + " runs, got " + std::to_string(runs.size()));
  for (std::size_t k = 0; k < runs.size(); ++k)
    wts::validate_run(systems[k], runs[k]);
  const auto collective = wts::collective_run(runs);
  const json doc = collective_to_json(systems, collective, wts::collective_word_of(systems, collective));
  out << trace_csv(doc);
  if (!o.out_dir.empty())
    write_trace(o.out_dir, doc);
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-agent plan synthesis from MITL specifications"};
  app.require_subcommand(1);
  Options o;

  auto* plan = app.add_subcommand("plan", "Synthesize runs for every agent; writes plan.json, trace.csv, timeline.svg");
  plan->add_option("--model", o.model, "Model file (JSON)")->required();
  plan->add_option("--formula", o.formulas, "Override a formula: NAME=FORMULA (NAME is an agent or 'team')");
  plan->add_option("--out-dir", o.out_dir, "Output directory (default: current directory)");
  plan->add_option("--state-budget", o.state_budget, "Stop after exploring this many product states");
  plan->add_flag("--no-scale", o.no_scale, "Skip rescaling rational constants to integers");

  auto* check = app.add_subcommand("check", "Evaluate formulas on given runs");
  check->add_option("--model", o.model, "Model file (JSON)")->required();
  check->add_option("--runs", o.runs, "Runs file; defaults to the model's \"runs\" field");
  check->add_option("--formula", o.formulas, "NAME=FORMULA to check; replaces all of the model's formulas");
  check->add_option("--out-dir", o.out_dir, "Also write check.json here");

  auto* translate = app.add_subcommand("translate", "Translate a formula to a timed Buchi automaton file");
  translate->add_option("formula,--formula", o.formula_text, "Formula text")->required();
  translate->add_option("--out-dir", o.out_dir, "Write tba.json here instead of printing it");

  auto* simulate = app.add_subcommand("simulate", "Merge runs into the collective run; prints trace.csv");
  simulate->add_option("--model", o.model, "Model file (JSON)")->required();
  simulate->add_option("--runs", o.runs, "Runs file; defaults to the model's \"runs\" field");
  simulate->add_option("--out-dir", o.out_dir, "Also write trace.csv and timeline.svg here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_input;
  }

  try {
    if (*plan)
      return do_plan(o, out);
    if (*check)
      return do_check(o, out);
    if (*translate)
      return do_translate(o, out);
    return do_simulate(o, out);
  } catch (const tba::UnsupportedFragment& e) {
    err << "error: " << e.what() << "\n"
        << "hint: offending subterm '" << e.subformula()
        << "'. Give the agent a \"tba\" file instead (fields: locations, clocks, edges).\n";
    return exit_unsupported;
  } catch (const search::InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    // Parse, model, run and validation errors alike.
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

} // namespace mitlplan::cli
