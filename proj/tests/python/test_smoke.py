import json
import pathlib

import pytest

import mitlplan

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def stamps(collective):
    return [e["time"] for e in collective["prefix"] + collective["cycle"]]


def test_simulate_example_stamps():
    c = mitlplan.simulate(FIXTURES / "example1.json")
    assert stamps(c)[:7] == ["0", "1", "2", "5/2", "3", "9/2", "5"]
    assert c["cycle"][1]["states"] == ["pi3", "pi3"]
    assert mitlplan.trace_csv(c).splitlines()[0] == "time,R1,R2,atoms,segment"
    assert mitlplan.timeline_svg(c).startswith("<svg")


def test_plan_grid_case_study():
    doc = mitlplan.plan(FIXTURES / "sec5.json")
    assert doc["status"] == "SUCCESS"
    assert all(v["holds"] for v in doc["verdicts"])
    assert len(doc["runs"]) == 2
    # The runs section feeds straight back into check.
    report = mitlplan.check(FIXTURES / "sec5.json", runs=doc)
    assert report["all_hold"]
    assert [v["holds"] for v in report["verdicts"]] == [v["holds"] for v in doc["verdicts"]]


def test_plan_unsat_and_budget():
    assert mitlplan.plan(FIXTURES / "sec5.json", {"R1": "F[<=1] recharge1"})["status"] == "UNSATISFIABLE"
    assert mitlplan.plan(FIXTURES / "sec5.json", state_budget=10)["status"] == "EXPLORATION_LIMIT"


def test_plan_from_dict_model():
    model = mitlplan.load_model(FIXTURES / "sec5.json")
    model["agents"][0]["formula"] = "F[<=8] recharge1"
    doc = mitlplan.plan(model, scale=False)
    assert doc["status"] == "SUCCESS"
    assert doc["stats"]["scale_factor"] == "1"


def test_check_explicit_formulas():
    phi = "G (red -> X G[<=5] !red)"
    report = mitlplan.check(FIXTURES / "example1.json", formulas={"R2": phi})
    formula = [v for v in report["verdicts"] if v["method"] == "formula"]
    assert len(formula) == 1
    assert formula[0]["subject"] == "R2"
    assert not formula[0]["holds"]
    assert formula[0]["violation_time"] == "5/2"


def test_satisfies_and_translate_agree():
    word = {
        "prefix": [{"atoms": [], "time": "0"}],
        "cycle": [{"atoms": ["p"], "time": "3/2"}, {"atoms": [], "time": "2"}],
        "period": "1",
    }
    for text in ["F[<=2] p", "F[<=1] p", "G F[<=1] p", "G[0,1] !p"]:
        expected = mitlplan.satisfies(text, word)["holds"]
        assert mitlplan.accepts(mitlplan.translate(text), word) == expected
    assert mitlplan.satisfies("F[<=2] p", word) == {"holds": True}
    assert mitlplan.satisfies("G !p", word)["violation_time"] == "3/2"


def test_errors():
    with pytest.raises(mitlplan.FormulaError, match=r"\[6,0\]"):
        mitlplan.normalize("F[6,0] p")
    with pytest.raises(mitlplan.UnsupportedFragmentError):
        mitlplan.translate("F (p U q)")
    with pytest.raises(mitlplan.InputError):
        mitlplan.plan(FIXTURES / "sec5.json", {"R9": "true"})
    with pytest.raises(ValueError):
        mitlplan.plan({"agents": []})
    assert not mitlplan.in_fragment("F (p U q)")
    assert mitlplan.normalize("F[<=6] p") == "F[0,6] p"


def test_translate_shape():
    a = mitlplan.translate("F[<=6] recharge1")
    assert a["clocks"] == ["x"]
    assert json.loads(json.dumps(a)) == a
