// Thin layer over the C++ library. Structured values cross the boundary as
// JSON text; the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mitlplan/cli/export.hpp"
#include "mitlplan/mitl/evaluator.hpp"
#include "mitlplan/mitl/parser.hpp"
#include "mitlplan/search/problem.hpp"
#include "mitlplan/tba/io.hpp"
#include "mitlplan/tba/membership.hpp"
#include "mitlplan/tba/translate.hpp"

namespace py = pybind11;
using namespace mitlplan;
using nlohmann::json;
using Overrides = std::map<std::string, std::string>;

namespace {

wts::Model model_of(const std::string& text, const std::string& base_dir) {
  return wts::model_from_json(json::parse(text, nullptr, true, true), base_dir);
}

std::vector<wts::TimedRun> runs_of(const wts::Model& model, const std::string& runs_text) {
  if (!runs_text.empty())
    return wts::runs_from_json(model.systems(), json::parse(runs_text));
  if (model.runs)
    return *model.runs;
  throw wts::ModelFormatError("no runs given and the model has no \"runs\" field");
}

std::string plan(const std::string& model_text, const std::string& base_dir, const Overrides& overrides,
                 std::size_t state_budget, bool scale) {
  const auto problem = search::problem_from_model(model_of(model_text, base_dir), overrides);
  search::PlanOptions o;
  o.state_budget = state_budget;
  o.scale = scale;
  search::PlanResult r;
  {
    py::gil_scoped_release release;
    r = search::plan(problem, o);
  }
  return cli::plan_to_json(problem.systems(), r).dump();
}

std::string check(const std::string& model_text, const std::string& base_dir, const std::string& runs_text,
                  const Overrides& overrides, bool replace) {
  auto model = model_of(model_text, base_dir);
  const auto runs = runs_of(model, runs_text);
  if (replace) {
    for (auto& a : model.agents) {
      a.formula.reset();
      a.tba.reset();
    }
    model.global_formula.reset();
    model.global_tba.reset();
  }
  const auto problem = search::problem_from_model(model, overrides);
  const auto report = search::check_runs(problem, runs);
  json verdicts = json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back(cli::verdict_to_json(v));
  return json{{"verdicts", verdicts},
              {"all_hold", report.all_hold()},
              {"collective", cli::collective_to_json(problem.systems(), report.collective, report.collective_word)}}
      .dump();
}

std::string simulate(const std::string& model_text, const std::string& base_dir, const std::string& runs_text) {
  const auto model = model_of(model_text, base_dir);
  const auto runs = runs_of(model, runs_text);
  const auto systems = model.systems();
  if (runs.size() != systems.size())
    throw wts::RunError("expected " + std::to_string(systems.size()) + " runs, got " + std::to_string(runs.size()));
  for (std::size_t k = 0; k < runs.size(); ++k)
    wts::validate_run(systems[k], runs[k]);
  const auto cr = wts::collective_run(runs);
  return cli::collective_to_json(systems, cr, wts::collective_word_of(systems, cr)).dump();
}

// {"prefix": [{"atoms": [...], "time": "0"}], "cycle": [...], "period": "1"}
LassoTimedWord word_of(const std::string& text) {
  const auto j = json::parse(text);
  auto part = [](const json& p) {
    std::vector<Stamped<AtomSet>> out;
    for (const auto& e : p)
      out.push_back({AtomSet(e.at("atoms").get<std::vector<std::string>>()), wts::rational_from_json(e.at("time"))});
    return out;
  };
  return LassoTimedWord(part(j.value("prefix", json::array())), part(j.at("cycle")),
                        wts::rational_from_json(j.at("period")));
}

py::dict satisfies(const std::string& formula_text, const std::string& word_text) {
  const auto f = mitl::parse_formula(formula_text);
  const auto w = word_of(word_text);
  py::dict out;
  const bool holds = mitl::satisfies(w, f);
  out["holds"] = holds;
  if (!holds)
    if (const auto v = mitl::first_violation(w, f)) {
      out["violation_position"] = *v;
      out["violation_time"] = w.time_at(*v).str();
    }
  return out;
}

bool accepts(const std::string& tba_text, const std::string& word_text) {
  return tba::accepts_lasso(tba::tba_from_json(json::parse(tba_text)), word_of(word_text));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of mitlplan";

  static py::exception<std::exception> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<std::exception> formula_error(m, "FormulaError", input_error.ptr());
  static py::exception<std::exception> unsupported(m, "UnsupportedFragmentError", input_error.ptr());
  static py::exception<std::exception> internal(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const mitl::ParseError& e) {
      formula_error(e.what());
    } catch (const tba::UnsupportedFragment& e) {
      unsupported(e.what());
    } catch (const search::InternalError& e) {
      internal(e.what());
    } catch (const json::exception& e) {
      input_error(e.what());
    } catch (const std::invalid_argument& e) { // problem, system, run, lasso errors
      input_error(e.what());
    } catch (const wts::ModelFormatError& e) {
      input_error(e.what());
    } catch (const tba::TbaFormatError& e) {
      input_error(e.what());
    }
  });

  m.attr("default_state_budget") = search::default_state_budget;
  m.def("plan", &plan, py::arg("model"), py::arg("base_dir"), py::arg("overrides"), py::arg("state_budget"),
        py::arg("scale"));
  m.def("check", &check, py::arg("model"), py::arg("base_dir"), py::arg("runs"), py::arg("overrides"),
        py::arg("replace"));
  m.def("simulate", &simulate, py::arg("model"), py::arg("base_dir"), py::arg("runs"));
  m.def("translate", [](const std::string& text) { return tba::tba_to_json(tba::translate_mitl(mitl::parse_formula(text))).dump(); },
        py::arg("formula"));
  m.def("normalize", [](const std::string& text) { return mitl::parse_formula(text).str(); }, py::arg("formula"));
  m.def("in_fragment", [](const std::string& text) { return tba::in_translatable_fragment(mitl::parse_formula(text)); },
        py::arg("formula"));
  m.def("satisfies", &satisfies, py::arg("formula"), py::arg("word"));
  m.def("accepts", &accepts, py::arg("tba"), py::arg("word"));
  m.def("strip_comments", [](const std::string& text) { return json::parse(text, nullptr, true, true).dump(); },
        py::arg("text"));
  m.def("trace_csv", [](const std::string& c) { return cli::trace_csv(json::parse(c)); }, py::arg("collective"));
  m.def("timeline_svg", [](const std::string& c) { return cli::timeline_svg(json::parse(c)); }, py::arg("collective"));
}
